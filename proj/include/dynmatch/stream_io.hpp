#ifndef DYNMATCH_STREAM_IO_HPP_
#define DYNMATCH_STREAM_IO_HPP_

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

namespace detail {

template <class T>
bool parse_number(std::string_view tok, T& out) {
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc() && ptr == end;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace detail

/// Parses one stream line. Returns false for blank and comment lines.
/// Throws ParseError naming `line_no` on malformed input.
inline bool parse_event_line(std::string_view line, std::size_t line_no, UpdateEvent& out) {
    auto fail = [&](const std::string& why) {
        return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') return false;
    const bool insert = toks[0] == "+";
    if (!insert && toks[0] != "-") throw fail("expected '+' or '-'");
    const std::size_t arity = toks.size() - 1;
    if (arity < 2 || arity > (insert ? 3u : 2u)) throw fail("wrong number of fields");
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    if (!detail::parse_number(toks[1], a) || !detail::parse_number(toks[2], b)) throw fail("bad vertex id");
    if (a == b) throw fail("self-loop");
    Weight w = 1;
    if (arity == 3 && (!detail::parse_number(toks[3], w) || w < 1)) throw fail("bad weight");
    out = insert ? make_insert(a, b, w) : make_delete(a, b);
    return true;
}

/// Reads a whole stream; events get seq = 1, 2, ...
inline std::vector<UpdateEvent> parse_stream(std::istream& in) {
    std::vector<UpdateEvent> events;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        UpdateEvent ev;
        if (!parse_event_line(line, line_no, ev)) continue;
        ev.seq = events.size() + 1;
        events.push_back(ev);
    }
    return events;
}

inline std::vector<UpdateEvent> parse_stream(const std::string& text) {
    std::istringstream in(text);
    return parse_stream(in);
}

inline std::string format_event(const UpdateEvent& ev) {
    std::string out = ev.is_insert() ? "+ " : "- ";
    out += std::to_string(ev.edge.u) + " " + std::to_string(ev.edge.v);
    if (ev.is_insert() && ev.edge.w != 1) out += " " + std::to_string(ev.edge.w);
    return out;
}

inline void write_stream(std::ostream& out, const std::vector<UpdateEvent>& events) {
    for (const auto& ev : events) out << format_event(ev) << '\n';
}

}  // namespace dynmatch

#endif  // DYNMATCH_STREAM_IO_HPP_
