#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "newsscope/api.hpp"
#include "newsscope/corpus_store.hpp"
#include "newsscope/serialize.hpp"

namespace {

newsscope::HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

int run_ingest(const std::string& corpus, const std::string& config_path, const std::string& out) {
    const auto config = newsscope::IngestConfig::load(config_path);
    const auto options = config.load_options();
    std::ifstream in(corpus, std::ios::binary);
    if (!in) throw newsscope::validation_error("cannot open corpus " + corpus, "corpus");
    auto result = newsscope::CorpusStore::ingest(in, options);
    result.store.save(out);
    nlohmann::json report = result.report;
    report["store"] = out;
    report["manifest_digest"] = result.store.manifest_digest();
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_serve(const std::string& store_dir, const std::string& config_path, int port_override) {
    auto config = config_path.empty() ? newsscope::ServerConfig{} : newsscope::ServerConfig::load(config_path);
    if (!store_dir.empty()) config.store = store_dir;
    if (port_override >= 0) config.port = port_override;
    if (config.store.empty()) throw newsscope::validation_error("no store directory given", "store");
    auto store = std::make_shared<const newsscope::CorpusStore>(newsscope::CorpusStore::open(config.store));
    auto service = std::make_shared<const newsscope::ApiService>(store, config);
    newsscope::HttpServer server(service);
    const int port = server.bind(config.host, config.port);
    if (port < 0) {
        std::cerr << "cannot bind " << config.host << ':' << config.port << '\n';
        return 1;
    }
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "serving " << store->manifest().corpus_name << " (" << store->size() << " articles) on http://"
              << config.host << ':' << port << '\n';
    server.listen();
    g_server = nullptr;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"News coverage diversity analytics engine"};
    app.require_subcommand(1);

    std::string corpus, ingest_config, out;
    auto* ingest = app.add_subcommand("ingest", "Ingest a CSV corpus into a store directory");
    ingest->add_option("--corpus", corpus, "CSV corpus file")->required();
    ingest->add_option("--config", ingest_config, "Ingest config file")->required();
    ingest->add_option("--out", out, "Output store directory")->required();

    std::string store_dir, serve_config;
    int port = -1;
    auto* serve = app.add_subcommand("serve", "Serve the HTTP/JSON API over a store");
    serve->add_option("--store", store_dir, "Store directory");
    serve->add_option("--config", serve_config, "Server config file");
    serve->add_option("--port", port, "Override the configured port (0 = any free port)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return run_ingest(corpus, ingest_config, out);
        if (*serve) return run_serve(store_dir, serve_config, port);
    } catch (const newsscope::Error& e) {
        std::cerr << "error (" << newsscope::to_string(e.code()) << "): " << e.what();
        if (!e.field().empty()) std::cerr << " [" << e.field() << ']';
        std::cerr << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
