#pragma once

#include <map>
#include <memory>
#include <string>

namespace bitlet::service {

struct Request {
    std::string method;  // GET, POST, ...
    std::string path;    // decoded, without the query string
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Stateless dispatcher behind the HTTP server:
///   POST /evaluate  /sweep  /contour  /crossover   (config document body)
///   GET  /scenarios  /scenarios/{id}/run  /health
/// Validation problems give 400 with {"errors": [{field, message}]}; an
/// unknown scenario or route gives 404.
[[nodiscard]] Response handle(const Request& request);

/// Convenience overload splitting "path?query" itself.
[[nodiscard]] Response handle(const std::string& method, const std::string& target, const std::string& body = {});

/// HTTP front end for handle(). Every request is served independently; the
/// only shared state is the immutable scenario catalog.
class Server {
public:
    Server();
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds without serving. Port 0 picks a free port. Returns the bound
    /// port, or -1 on failure.
    int bind(const std::string& host, int port);
    /// Serves until stop(). Returns false if the socket failed.
    bool listen();
    /// Runs listen() on a background thread and waits until it accepts.
    void start();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace bitlet::service
