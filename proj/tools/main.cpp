#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "cli_commands.hpp"
#include "pirac/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"covering-code PIR toolkit: tradeoff tables, access curves, coset weights, "
                 "scheme simulation, covering-code search"};
    app.require_subcommand(1);

    pirac::cli::TablesConfig tables;
    auto* st = app.add_subcommand("tables", "write the rate/access tradeoff tables as CSV");
    st->add_option("--n", tables.N, "number of servers")->capture_default_str();
    st->add_option("--eps", tables.eps, "per-server storage fraction")->capture_default_str();
    st->add_option("--k", tables.K, "keep only the row with this K");
    st->add_option("--p", tables.p, "memory-sharing numerator");
    st->add_option("--q", tables.q, "memory-sharing denominator");
    st->add_option("--out", tables.out_dir, "output directory")->capture_default_str();

    pirac::cli::CurveConfig curve;
    auto* sc = app.add_subcommand("curve", "sample the access/storage tradeoff curve");
    sc->add_option("--beta-min", curve.beta_min, "smallest beta")->capture_default_str();
    sc->add_option("--beta-max", curve.beta_max, "largest beta")->capture_default_str();
    sc->add_option("--steps", curve.steps, "number of samples")->capture_default_str();
    sc->add_option("--out", curve.out, "output CSV path")->capture_default_str();

    pirac::cli::CosetConfig coset;
    auto* sw = app.add_subcommand("coset-weights", "tabulate R_tau for a covering code");
    sw->add_option("--backend", coset.backend,
                   "hamming:<m>, ext-hamming:<m>, or a code file path")
        ->required();
    sw->add_option("--tau-max", coset.tau_max, "largest tau")->capture_default_str();
    sw->add_option("--out", coset.out, "output CSV path")->capture_default_str();

    pirac::cli::SimulateConfig sim;
    auto* ss = app.add_subcommand("simulate", "run a PIR scheme and report access statistics");
    ss->add_option("--scheme", sim.sim.scheme, "two-server | replicated | mds32 | bep")
        ->required();
    ss->add_option("--n", sim.sim.N, "number of servers")->capture_default_str();
    ss->add_option("--m", sim.sim.M, "number of files")->capture_default_str();
    ss->add_option("--l", sim.sim.L, "file length in bits")->capture_default_str();
    ss->add_option("--backend", sim.sim.backend,
                   "identity | sum-augmented | hamming:<m> | ext-hamming:<m> | "
                   "restricted-example3 | code file path");
    ss->add_option("--trials", sim.sim.trials, "sampled trials when not exhaustive")
        ->capture_default_str();
    ss->add_option("--seed", sim.sim.seed, "sampling seed")->capture_default_str();
    ss->add_option("--db-seed", sim.sim.db_seed, "database fill seed")->capture_default_str();
    ss->add_option("--db", sim.sim.db_path, "raw database file (M*L bits)");
    ss->add_option("--out", sim.out, "output path")->capture_default_str();
    ss->add_option("--format", sim.format, "csv | json")->capture_default_str();
    ss->add_option("--transcript-out", sim.transcript_out,
                   "also write the first run's transcript JSON here");

    pirac::cli::SearchConfig search;
    auto* sr = app.add_subcommand("search", "randomized search for a covering code");
    sr->add_option("--l", search.l, "code length")->required();
    sr->add_option("--r", search.r, "parity-check rows")->required();
    sr->add_option("--radius", search.radius, "target covering radius")->required();
    sr->add_option("--budget", search.budget, "matrices to try")->capture_default_str();
    sr->add_option("--seed", search.seed, "search seed")->capture_default_str();
    sr->add_option("--out", search.out, "output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (*st) pirac::cli::cmd_tables(tables);
        if (*sc) pirac::cli::cmd_curve(curve);
        if (*sw) pirac::cli::cmd_coset_weights(coset);
        if (*ss) pirac::cli::cmd_simulate(sim);
        if (*sr) pirac::cli::cmd_search(search);
    } catch (const pirac::feasibility_error& e) {
        std::cerr << "feasibility guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
