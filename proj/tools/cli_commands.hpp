#pragma once

#include <cstdint>
#include <string>

#include "pirac/runner.hpp"

namespace pirac::cli {

std::string fmt_double(double v);  // shortest round-trip decimal
std::string fmt_fixed3(double v);  // 3 decimals, half-up

struct TablesConfig {
    std::size_t N = 10;
    double eps = 1.0;
    std::size_t K = 0;        // nonzero: keep only this row
    std::size_t p = 0, q = 0; // both nonzero: also write memory_sharing.csv
    std::string out_dir = ".";
};
void cmd_tables(const TablesConfig& cfg);

struct CurveConfig {
    double beta_min = 1.0;
    double beta_max = 10.0;
    std::size_t steps = 91;
    std::string out = "curve.csv";
};
void cmd_curve(const CurveConfig& cfg);

struct CosetConfig {
    std::string backend;  // hamming:<m> | ext-hamming:<m> | code file path
    std::size_t tau_max = 3;
    std::string out = "coset_weights.csv";
};
void cmd_coset_weights(const CosetConfig& cfg);

struct SimulateConfig {
    SimOptions sim;
    std::string format = "csv";  // csv | json
    std::string out = "simulate.csv";
    std::string transcript_out;  // when set, writes the first run's transcript JSON
};
void cmd_simulate(const SimulateConfig& cfg);

struct SearchConfig {
    std::size_t l = 7;
    std::size_t r = 3;
    std::size_t radius = 1;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::string out = "found_code.txt";
};
void cmd_search(const SearchConfig& cfg);

}  // namespace pirac::cli
