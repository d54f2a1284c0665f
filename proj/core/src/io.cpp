#include "pirac/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pirac {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << data;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string format_matrix(const BitMatrix& m) {
    std::string out;
    out.reserve(m.rows * (m.cols + 1));
    for (std::size_t i = 0; i < m.rows; ++i) {
        out += m.row[i].to_string();
        out += '\n';
    }
    return out;
}

BitMatrix parse_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("matrix text has no rows");
    return BitMatrix::from_rows(rows);
}

std::string format_code(const CoveringCode& code) {
    std::ostringstream out;
    out << code.r << ' ' << code.l << ' ' << code.radius << '\n';
    out << format_matrix(code.H);
    return out.str();
}

CoveringCode parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("code file is empty");
    std::istringstream hs(header);
    std::size_t r = 0, l = 0, radius = 0;
    if (!(hs >> r >> l >> radius)) throw std::invalid_argument("code header must be 'r l radius'");
    std::string extra;
    if (hs >> extra) throw std::invalid_argument("code header must be 'r l radius'");
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    BitMatrix H = parse_matrix(rest);
    if (H.rows != r || H.cols != l)
        throw std::invalid_argument("code matrix does not match declared dimensions");
    CoveringCode code = build_code(H);
    if (code.radius != radius)
        throw std::invalid_argument("declared covering radius does not match the matrix");
    return code;
}

Database read_database_file(const std::string& path, std::size_t M, std::size_t L) {
    std::string raw = read_file(path);
    const std::size_t bits = M * L;
    const std::size_t bytes = (bits + 7) / 8;
    if (raw.size() != bytes)
        throw std::invalid_argument("database file must hold exactly M*L bits (" +
                                    std::to_string(bytes) + " bytes)");
    Database db;
    db.M = M;
    db.L = L;
    for (std::size_t m = 0; m < M; ++m) {
        BitVec v(L);
        for (std::size_t i = 0; i < L; ++i) {
            std::size_t bit = m * L + i;
            if ((raw[bit / 8] >> (bit % 8)) & 1) v.set(i, true);
        }
        db.files.push_back(std::move(v));
    }
    db.validate();
    return db;
}

std::string transcript_to_json(const Transcript& t) {
    nlohmann::json j;
    j["scheme"] = t.scheme;
    j["N"] = t.N;
    j["M"] = t.M;
    j["L"] = t.L;
    j["f"] = t.f;
    j["randomness"] = t.randomness;
    j["symbol_len"] = t.symbol_len;
    j["download_bits"] = t.download_bits;
    j["rate"] = t.rate();
    j["reconstructed"] = t.reconstructed.hex();
    AccessSummary sum = access_report(t);
    j["delta_sum"] = sum.delta_sum;
    j["delta_union"] = sum.delta_union;
    nlohmann::json servers = nlohmann::json::array();
    for (std::size_t n = 0; n < t.servers.size(); ++n) {
        const auto& sv = t.servers[n];
        nlohmann::json js;
        js["server"] = n + 1;
        js["stored_symbols"] = sv.stored_symbols;
        js["queries"] = sv.queries;
        nlohmann::json resp = nlohmann::json::array();
        for (const auto& v : sv.responses) resp.push_back(v.hex());
        js["responses"] = resp;
        js["accessed"] = sv.accessed;
        js["sum_symbols"] = sum.servers[n].sum_symbols;
        js["union_symbols"] = sum.servers[n].union_symbols;
        servers.push_back(std::move(js));
    }
    j["servers"] = std::move(servers);
    return j.dump(2) + "\n";
}

}  // namespace pirac
