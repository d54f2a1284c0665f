#include "doctest.h"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "pirac/io.hpp"

using namespace pirac;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix text round trip") {
    BitMatrix m = BitMatrix::from_rows({"1011", "0110", "1100"});
    std::string text = format_matrix(m);
    CHECK(text == "1011\n0110\n1100\n");
    BitMatrix back = parse_matrix(text);
    REQUIRE(back.rows == 3);
    REQUIRE(back.cols == 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK(back.row[i] == m.row[i]);
}

TEST_CASE("matrix parsing tolerates CRLF and rejects junk") {
    BitMatrix m = parse_matrix("10\r\n01\r\n");
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK_THROWS_AS(parse_matrix(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("10\n0\n"), std::invalid_argument);    // ragged
    CHECK_THROWS_AS(parse_matrix("10\n0x\n"), std::invalid_argument);   // non-binary
}

TEST_CASE("covering code file round trip") {
    CoveringCode code = build_code(hamming_parity(3));
    std::string text = format_code(code);
    CoveringCode back = parse_code(text);
    CHECK(back.r == code.r);
    CHECK(back.l == code.l);
    CHECK(back.radius == code.radius);
    for (std::size_t s = 0; s < code.leader.size(); ++s) CHECK(back.leader[s] == code.leader[s]);
}

TEST_CASE("code parsing rejects tampered headers") {
    CoveringCode code = build_code(hamming_parity(3));
    std::string text = format_code(code);
    // radius lie
    std::string lied = text;
    lied[4] = '2';  // header is "3 7 1"
    CHECK_THROWS_WITH_AS(parse_code(lied),
                         "declared covering radius does not match the matrix",
                         std::invalid_argument);
    // dimension lie
    std::string wrong_l = text;
    wrong_l[2] = '6';
    CHECK_THROWS_AS(parse_code(wrong_l), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("3 7\n"), std::invalid_argument);  // short header
    CHECK_THROWS_AS(parse_code(""), std::invalid_argument);
}

TEST_CASE("database file reads the documented bit layout") {
    TempFile tmp("db.bin");
    // M=2, L=5 -> 10 bits -> 2 bytes. file 1 = 10110, file 2 = 01001.
    // bit k of the stream = raw[k/8] >> (k%8): stream 1011001001 -> bytes
    // 0b01001101 = 0x4d, 0b00000010 = 0x02.
    write_file(tmp.path, std::string("\x4d\x02", 2));
    Database db = read_database_file(tmp.path, 2, 5);
    CHECK(db.files[0].to_string() == "10110");
    CHECK(db.files[1].to_string() == "01001");
}

TEST_CASE("database file size must match exactly") {
    TempFile tmp("dbsize.bin");
    write_file(tmp.path, std::string(3, '\0'));
    CHECK_THROWS_AS(read_database_file(tmp.path, 2, 5), std::invalid_argument);   // wants 2 bytes
    CHECK_THROWS_AS(read_database_file(tmp.path, 4, 7), std::invalid_argument);   // wants 4 bytes
}

TEST_CASE("read_file reports missing paths") {
    CHECK_THROWS_AS(read_file("definitely_not_here.txt"), std::invalid_argument);
}

TEST_CASE("write_file then read_file round trips bytes") {
    TempFile tmp("bytes.bin");
    std::string payload("\x00\x01\xff binary\n", 11);
    write_file(tmp.path, payload);
    CHECK(read_file(tmp.path) == payload);
}

TEST_CASE("transcript serializes to parseable JSON") {
    Database db = Database::random(3, 4, 17);
    Transcript t = scheme_two_server(db, 2, BitVec::from_index(5, 3), true);
    std::string text = transcript_to_json(t);
    auto j = nlohmann::json::parse(text);
    CHECK(j["scheme"] == "two-server");
    CHECK(j["N"] == 2);
    CHECK(j["M"] == 3);
    CHECK(j["L"] == 4);
    CHECK(j["f"] == 2);
    CHECK(j["download_bits"] == 8);
    CHECK(j["rate"] == doctest::Approx(0.5));
    CHECK(j["reconstructed"] == db.files[1].hex());
    REQUIRE(j["servers"].size() == 2);
    CHECK(j["servers"][0]["server"] == 1);
    CHECK(j["servers"][0]["queries"].size() == 1);
    CHECK(j["servers"][0]["responses"].size() == 1);
    CHECK(j["servers"][0]["accessed"].size() == 1);
    AccessSummary sum = access_report(t);
    CHECK(j["delta_sum"] == doctest::Approx(sum.delta_sum));
    CHECK(j["delta_union"] == doctest::Approx(sum.delta_union));
}
