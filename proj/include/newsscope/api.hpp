#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "newsscope/corpus_store.hpp"
#include "newsscope/error.hpp"

namespace newsscope {

inline constexpr int kSchemaVersion = 1;

struct ServerConfig {
    std::filesystem::path store;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::uint64_t default_seed = 42;
    std::size_t default_k = 4;
    std::size_t silhouette_low = 2;
    std::size_t silhouette_high = 10;
    double site_edge_threshold = 0.2;
    /// Default top-N for site keyword/entity lists and cluster-label rows.
    std::size_t top_keywords = 10;
    /// Allowed CORS origins; "*" allows any.
    std::vector<std::string> cors_allow;

    void validate() const;
    /// INI-style `key = value` file; relative `store` paths resolve against the file.
    static ServerConfig load(const std::filesystem::path& path);
};

struct ApiResponse {
    int status = 200;
    std::string body;
    std::string etag;
};

/// Stateless request handlers over an immutable store. Thread-safe.
///
/// Every response body is a JSON object carrying `schema_version`. Errors are
/// `{"error": {"code", "message", "field"?}}` with code validation_error (400),
/// not_found (404) or internal (500).
class ApiService {
public:
    ApiService(std::shared_ptr<const CorpusStore> store, ServerConfig config);

    /// Routes a request. `path` excludes the query string.
    ApiResponse handle(const std::string& method, const std::string& path, const std::string& body,
                       const std::multimap<std::string, std::string>& query = {}) const;

    nlohmann::json health() const;
    nlohmann::json sites() const;
    nlohmann::json search(const nlohmann::json& request) const;
    nlohmann::json layout(const nlohmann::json& request) const;
    nlohmann::json silhouette(const nlohmann::json& request) const;
    nlohmann::json emotion_clusters(const nlohmann::json& request) const;
    nlohmann::json entity_matrix(const nlohmann::json& request) const;
    nlohmann::json site_overview(const nlohmann::json& request) const;
    nlohmann::json cluster_labels(const nlohmann::json& request) const;
    nlohmann::json article(const std::string& id, bool annotate) const;

    const ServerConfig& config() const { return config_; }
    const CorpusStore& store() const { return *store_; }

private:
    std::shared_ptr<const CorpusStore> store_;
    ServerConfig config_;
};

nlohmann::json error_body(ErrorCode code, const std::string& message, const std::string& field = {});
int http_status(ErrorCode code) noexcept;

/// HTTP/1.1 front end for ApiService.
class HttpServer {
public:
    explicit HttpServer(std::shared_ptr<const ApiService> service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds; port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace newsscope
