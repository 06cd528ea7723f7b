#pragma once

#include <string>

#include "privscan/service/scan_service.hpp"

namespace privscan::service {

/// Serializes a ScanResult to the response body. Field order is fixed:
/// detections, images, cards, timings, warnings, policy_from_cache. PNGs are
/// base64. Encoding the same result twice yields identical bytes.
std::string encode_result(const ScanResult& result);

/// Inverse of encode_result; images come back as raw PNG bytes.
/// Throws SchemaError when the body does not match the contract.
ScanResult decode_result(const std::string& body);

/// Error responses: {"error": code, "message": str}.
std::string encode_error(const std::string& code, const std::string& message);

} // namespace privscan::service
