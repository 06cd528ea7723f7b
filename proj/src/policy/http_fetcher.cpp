#include "httplib.h"

#include "privscan/policy/fetch.hpp"
#include "privscan/policy/url.hpp"

namespace privscan::policy {

HttpGet make_http_fetcher(std::chrono::seconds timeout) {
    return [timeout](const std::string& url) -> FetchResponse {
        UrlParts parts;
        try {
            parts = parse_url(url);
        } catch (const InvalidUrlError& e) {
            return FetchResponse{0, e.what()};
        }

        httplib::Client client(parts.scheme + "://" + parts.host + ":" +
                               std::to_string(parts.port));
        client.set_connection_timeout(timeout.count(), 0);
        client.set_read_timeout(timeout.count(), 0);
        client.set_follow_location(true);

        std::string target = parts.path;
        if (!parts.query.empty()) target += "?" + parts.query;

        auto res = client.Get(target);
        if (!res) {
            return FetchResponse{0, "transport error: " + httplib::to_string(res.error())};
        }
        return FetchResponse{res->status, res->body};
    };
}

} // namespace privscan::policy
