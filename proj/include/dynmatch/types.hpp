#ifndef DYNMATCH_TYPES_HPP_
#define DYNMATCH_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dynmatch {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

enum class ErrorCode {
    SelfLoop,
    DuplicateInsert,
    MissingDelete,
    WeightOutOfRange,
    InvalidCover,
    OracleLimitExceeded,
    InvalidLevelMatching,
    InvalidParams,
    ParseError,
    GuaranteeViolation,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateInsert: return "DuplicateInsert";
    case ErrorCode::MissingDelete: return "MissingDelete";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::OracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::InvalidLevelMatching: return "InvalidLevelMatching";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GuaranteeViolation: return "GuaranteeViolation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Undirected weighted edge in canonical form (u < v). Identity is the
/// endpoint pair; the weight rides along.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 1;

    Edge() = default;
    Edge(Vertex a, Vertex b, Weight weight = 1) : u(a < b ? a : b), v(a < b ? b : a), w(weight) {
        if (a == b) {
            throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }

    bool touches(Vertex x) const noexcept { return u == x || v == x; }
    bool shares_endpoint(const Edge& o) const noexcept {
        return touches(o.u) || touches(o.v);
    }
    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    std::pair<Vertex, Vertex> key() const noexcept { return {u, v}; }

    friend bool operator==(const Edge& a, const Edge& b) noexcept { return a.key() == b.key(); }
    friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept {
        return a.key() <=> b.key();
    }
};

inline std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ";" + std::to_string(e.w) + ")";
}

}  // namespace dynmatch

#endif  // DYNMATCH_TYPES_HPP_
