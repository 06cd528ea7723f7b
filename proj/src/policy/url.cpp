#include "privscan/policy/url.hpp"

#include <cctype>

#include "privscan/util/strings.hpp"

namespace privscan::policy {

UrlParts parse_url(std::string_view raw) {
    const std::string_view input = util::trim(raw);
    const std::size_t scheme_end = input.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) {
        throw InvalidUrlError("url: missing scheme: '" + std::string(raw) + "'");
    }

    UrlParts parts;
    parts.scheme = util::to_lower(input.substr(0, scheme_end));
    if (parts.scheme != "http" && parts.scheme != "https") {
        throw InvalidUrlError("url: unsupported scheme '" + parts.scheme + "'");
    }

    std::string_view rest = input.substr(scheme_end + 3);
    const std::size_t authority_end = rest.find_first_of("/?#");
    std::string_view authority = rest.substr(0, authority_end);
    std::string_view tail =
        authority_end == std::string_view::npos ? std::string_view{} : rest.substr(authority_end);

    if (authority.empty()) throw InvalidUrlError("url: empty host");
    if (authority.find('@') != std::string_view::npos) {
        throw InvalidUrlError("url: userinfo not supported");
    }

    const std::size_t colon = authority.rfind(':');
    std::string_view host = authority;
    if (colon != std::string_view::npos) {
        host = authority.substr(0, colon);
        const std::string_view port_str = authority.substr(colon + 1);
        if (port_str.empty()) throw InvalidUrlError("url: empty port");
        int port = 0;
        for (char c : port_str) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InvalidUrlError("url: non-numeric port");
            }
            port = port * 10 + (c - '0');
            if (port > 65535) throw InvalidUrlError("url: port out of range");
        }
        if (port == 0) throw InvalidUrlError("url: port out of range");
        parts.port = port;
    }
    if (host.empty()) throw InvalidUrlError("url: empty host");
    for (char c : host) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw InvalidUrlError("url: whitespace in host");
        }
    }
    parts.host = util::to_lower(host);
    if (parts.port == 0) parts.port = parts.scheme == "https" ? 443 : 80;

    // split tail into path / query, drop any fragment
    const std::size_t frag = tail.find('#');
    if (frag != std::string_view::npos) tail = tail.substr(0, frag);
    const std::size_t q = tail.find('?');
    if (q != std::string_view::npos) {
        parts.path = std::string(tail.substr(0, q));
        parts.query = std::string(tail.substr(q + 1));
    } else {
        parts.path = std::string(tail);
    }
    if (parts.path.empty()) parts.path = "/";
    return parts;
}

std::string normalize_url(std::string_view raw) {
    const UrlParts p = parse_url(raw);
    const bool default_port =
        (p.scheme == "http" && p.port == 80) || (p.scheme == "https" && p.port == 443);
    std::string out = p.scheme + "://" + p.host;
    if (!default_port) out += ":" + std::to_string(p.port);
    out += p.path;
    if (!p.query.empty()) out += "?" + p.query;
    return out;
}

} // namespace privscan::policy
