#pragma once

#include <string>

#include "pirac/bitmatrix.hpp"
#include "pirac/covering.hpp"
#include "pirac/database.hpp"
#include "pirac/schemes.hpp"

namespace pirac {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

// one '0'/'1' row per line
std::string format_matrix(const BitMatrix& m);
BitMatrix parse_matrix(const std::string& text);

// header "r l radius" followed by the parity-check rows; parsing rebuilds the
// leader table and rejects the file when the declared radius disagrees
std::string format_code(const CoveringCode& code);
CoveringCode parse_code(const std::string& text);

// raw M*L bits, file-major, bytes packed LSB-first; size must match exactly
Database read_database_file(const std::string& path, std::size_t M, std::size_t L);

std::string transcript_to_json(const Transcript& t);

}  // namespace pirac
