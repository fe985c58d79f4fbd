#include <algorithm>

#include <httplib.h>

#include "newsscope/api.hpp"

namespace newsscope {

struct HttpServer::Impl {
    std::shared_ptr<const ApiService> service;
    httplib::Server server;

    void apply_cors(const httplib::Request& req, httplib::Response& res) const {
        const auto origin = req.get_header_value("Origin");
        if (origin.empty()) return;
        const auto& allow = service->config().cors_allow;
        const bool any = std::find(allow.begin(), allow.end(), "*") != allow.end();
        if (!any && std::find(allow.begin(), allow.end(), origin) == allow.end()) return;
        res.set_header("Access-Control-Allow-Origin", any ? "*" : origin);
        res.set_header("Vary", "Origin");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type, If-None-Match");
        res.set_header("Access-Control-Expose-Headers", "ETag");
    }

    void dispatch(const httplib::Request& req, httplib::Response& res) const {
        const std::multimap<std::string, std::string> query(req.params.begin(), req.params.end());
        const auto out = service->handle(req.method, req.path, req.body, query);
        apply_cors(req, res);
        res.set_header("ETag", out.etag);
        if (req.method == "GET" && out.status == 200 && req.get_header_value("If-None-Match") == out.etag) {
            res.status = 304;
            return;
        }
        res.status = out.status;
        res.set_content(out.body, "application/json; charset=utf-8");
    }
};

HttpServer::HttpServer(std::shared_ptr<const ApiService> service) : impl_(std::make_unique<Impl>()) {
    impl_->service = std::move(service);
    auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->dispatch(req, res); };
    impl_->server.Get(".*", handler);
    impl_->server.Post(".*", handler);
    impl_->server.Options(".*", [this](const httplib::Request& req, httplib::Response& res) {
        impl_->apply_cors(req, res);
        res.status = 204;
    });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace newsscope
