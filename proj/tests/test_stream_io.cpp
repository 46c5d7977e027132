#include <sstream>

#include <gtest/gtest.h>

#include "dynmatch/stream_io.hpp"
#include "dynmatch/workload.hpp"

using namespace dynmatch;

namespace {

ErrorCode parse_error_code(const std::string& text) {
    try {
        (void)parse_stream(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidParams;
}

std::string parse_error_text(const std::string& text) {
    try {
        (void)parse_stream(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(StreamIo, ParsesInsertsDeletesAndComments) {
    const auto events = parse_stream("# header\n+ 1 2\n\n+ 3 4 7\n- 2 1\n");
    ASSERT_EQ(events.size(), 3u);
    EXPECT_TRUE(events[0].is_insert());
    EXPECT_EQ(events[0].edge, Edge(1, 2));
    EXPECT_EQ(events[0].edge.w, 1);
    EXPECT_EQ(events[1].edge.w, 7);
    EXPECT_TRUE(events[2].is_delete());
    EXPECT_EQ(events[2].edge, Edge(1, 2));
    EXPECT_EQ(events[2].seq, 3u);
}

TEST(StreamIo, ToleratesExtraWhitespace) {
    const auto events = parse_stream("  +\t5   6  2 \r\n");
    ASSERT_EQ(events.size(), 1u);
    EXPECT_EQ(events[0].edge, Edge(5, 6, 2));
}

TEST(StreamIo, EmptyInputGivesNoEvents) { EXPECT_TRUE(parse_stream(std::string()).empty()); }

TEST(StreamIo, MalformedLinesNameTheLine) {
    EXPECT_EQ(parse_error_code("+ 1 2\n* 3 4\n"), ErrorCode::ParseError);
    EXPECT_NE(parse_error_text("+ 1 2\n* 3 4\n").find("line 2"), std::string::npos);
    EXPECT_EQ(parse_error_code("+ 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("+ 1 x\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("+ 1 2 0\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("+ 1 2 1.5\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("- 1 2 3\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("+ 4 4\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_code("+ -1 2\n"), ErrorCode::ParseError);
}

TEST(StreamIo, RoundTripsGeneratedStreams) {
    WorkloadParams p;
    p.kind = WorkloadKind::UniformChurn;
    p.n = 10;
    p.length = 300;
    p.wmax = 50;
    p.seed = 3;
    const auto events = generate_workload(p);
    std::ostringstream out;
    write_stream(out, events);
    const auto back = parse_stream(out.str());
    ASSERT_EQ(back.size(), events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        EXPECT_EQ(back[i].kind, events[i].kind);
        EXPECT_EQ(back[i].edge, events[i].edge);
        if (events[i].is_insert()) {
            EXPECT_EQ(back[i].edge.w, events[i].edge.w);
        }
    }
}
