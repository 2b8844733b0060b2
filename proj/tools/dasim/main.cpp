// Copyright 2026 The dasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "dasim/fermion/jordan_wigner.hpp"
#include "dasim/network/circuit_io.hpp"
#include "dasim/network/counts.hpp"
#include "dasim/network/simulate.hpp"
#include "dasim/noise/fit.hpp"
#include "dasim/refocus/schedule_io.hpp"
#include "dasim/refocus/verify.hpp"

namespace {

using namespace dasim;
using cli::ConfigError;

enum Exit { kOk = 0, kVerifyFailed = 2, kConfig = 3, kResource = 4 };

struct Options {
    std::string config;
    std::string out;
    std::string preset;
    std::string backend;
    std::string schedule;
    std::string topology;
    std::string regime = "uniform";
    int n = 0;
    std::optional<std::uint64_t> seed;
};

/// Writes to --out when given, stdout otherwise. Reports go to stdout when
/// the payload goes to a file and to stderr otherwise.
class Sink {
  public:
    explicit Sink(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ConfigError("cannot write output file '" + path + "'");
            }
        }
    }
    std::ostream &data() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }
    std::ostream &report() { return file_.is_open() ? std::cout : std::cerr; }

  private:
    std::ofstream file_;
};

YAML::Node config_of(const Options &o) {
    if (o.config.empty()) {
        throw ConfigError("--config is required for this command");
    }
    return cli::load_config(o.config);
}

std::optional<network::Backend> backend_override(const Options &o) {
    if (o.backend.empty()) {
        return std::nullopt;
    }
    try {
        return network::parse_backend(o.backend);
    } catch (const DomainError &e) {
        throw ConfigError(std::string("--backend: ") + e.what());
    }
}

template <class S>
refocus::CompileTarget<S> read_target(const YAML::Node &root, int n) {
    const auto pairs = cli::read_pairs(root);
    topology::EntityPartition part;
    try {
        part = topology::EntityPartition::from_pairs(n, pairs);
    } catch (const DomainError &e) {
        cli::fail(root["pairs"], "pairs", e.what());
    }
    auto num = [](const YAML::Node &x, const std::string &f) {
        if constexpr (is_exact_v<S>) {
            return cli::rational(x, f);
        } else {
            return cli::real(x, f);
        }
    };
    refocus::CompileTarget<S> t{part, {}};
    if (const YAML::Node a = cli::child(root, "angles")) {
        if (!a.IsSequence() || a.size() != pairs.size()) {
            cli::fail(a, "angles", "need one angle per pair");
        }
        // Angles follow the listed pair order; the partition sorts pairs.
        for (const auto &pr : part.pairs()) {
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (std::pair<int, int>(std::minmax(pairs[k].first, pairs[k].second)) == pr) {
                    t.angles.push_back(num(a[k], "angles"));
                }
            }
        }
    } else {
        const YAML::Node th = cli::child(root, "theta");
        S theta;
        if (th) {
            theta = num(th, "theta");
        } else if constexpr (is_exact_v<S>) {
            cli::fail(root, "theta", "exact mode needs an explicit rational theta");
        } else {
            theta = M_PI / 4;
        }
        t.angles.assign(part.pairs().size(), theta);
    }
    return t;
}

template <class S>
int run_compile(const YAML::Node &root, Sink &sink) {
    const auto g = cli::read_topology<S>(root);
    const auto target = read_target<S>(root, g.n_qubits());
    const int min_seq = cli::get_or<int>(root, "min_sequences", 1);
    refocus::SpreadPlan<S> plan;
    try {
        plan = refocus::plan_spread(g, target, min_seq);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    refocus::write_schedule(sink.data(), plan.schedule);
    auto &r = sink.report();
    r << "total duration " << format_scalar(plan.total) << ", " << plan.schedule.size() << " segments in "
      << plan.windows.size() << " window(s)\n";
    for (const auto &w : plan.windows) {
        r << "  window start " << format_scalar(w.start) << " length " << format_scalar(w.duration) << ", "
          << w.order << " sequences";
        for (const auto &[p, q] : w.destroyed) {
            r << " -(" << p << "," << q << ")";
        }
        r << '\n';
    }
    const double unit = cli::real_or(root, "time_unit", 1.0);
    const auto rep = refocus::verify_schedule(plan.schedule, g, target, unit);
    r << "verify: " << rep.summary() << '\n';
    return rep.pass ? kOk : kVerifyFailed;
}

int cmd_compile(const Options &o) {
    const YAML::Node root = config_of(o);
    Sink sink(o.out);
    return cli::get_or<bool>(root, "exact", false) ? run_compile<Rational>(root, sink)
                                                   : run_compile<double>(root, sink);
}

template <class S>
int run_verify(const YAML::Node &root, const std::string &path) {
    const auto g = cli::read_topology<S>(root);
    const auto target = read_target<S>(root, g.n_qubits());
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open schedule file '" + path + "'");
    }
    const auto sched = refocus::read_schedule<S>(in);
    if (sched.n_qubits() != g.n_qubits()) {
        throw ConfigError("schedule has " + std::to_string(sched.n_qubits()) + " qubits, topology has " +
                          std::to_string(g.n_qubits()));
    }
    const auto rep = refocus::verify_schedule(sched, g, target, cli::real_or(root, "time_unit", 1.0));
    std::cout << rep.summary() << '\n';
    return rep.pass ? kOk : kVerifyFailed;
}

int cmd_verify(const Options &o) {
    const YAML::Node root = config_of(o);
    std::string path = o.schedule;
    if (path.empty()) {
        const YAML::Node s = cli::child(root, "schedule");
        if (!s) {
            throw ConfigError("no schedule file: pass --schedule or set 'schedule' in the config");
        }
        path = cli::as<std::string>(s, "schedule");
        const auto base = std::filesystem::path(o.config).parent_path();
        if (std::filesystem::path(path).is_relative() && !base.empty()) {
            path = (base / path).string();
        }
    }
    return cli::get_or<bool>(root, "exact", false) ? run_verify<Rational>(root, path) : run_verify<double>(root, path);
}

/// Distance of one step to exact evolution followed by the mode relabelling.
double step_error(const cli::HamiltonianSpec &h, double dt, network::Backend b,
                  const std::optional<topology::CouplingGraph> &dev) {
    if (h.spinful) {
        const auto step = network::trotter_step_spinful(h.spin, dt, b, dev);
        const auto id = fermion::ModeOrder::identity(h.spin.n_sites);
        const qcore::Matrix exact = fermion::reorder_unitary_spinful(id, step.final_order) *
                           fermion::exact_evolution(fermion::jordan_wigner_spinful(h.spin, id), dt).matrix();
        return qcore::unitary_distance_up_to_phase(network::circuit_unitary(step.circuit).matrix(), exact);
    }
    const auto step = network::trotter_step_spinless(h.spinless, dt, b, dev);
    const auto id = fermion::ModeOrder::identity(h.spinless.n_modes);
    const qcore::Matrix exact = fermion::reorder_unitary(id, step.final_order) *
                       fermion::exact_evolution(fermion::jordan_wigner(h.spinless, id), dt).matrix();
    return qcore::unitary_distance_up_to_phase(network::circuit_unitary(step.circuit).matrix(), exact);
}

int cmd_trotter(const Options &o) {
    const YAML::Node root = config_of(o);
    const auto h = cli::read_hamiltonian(root, o.seed);
    const double dt = cli::real_or(root, "dt", 0.05);
    network::Backend b = network::Backend::digital_analog;
    if (const YAML::Node bn = cli::child(root, "backend")) {
        try {
            b = network::parse_backend(cli::as<std::string>(bn, "backend"));
        } catch (const DomainError &e) {
            cli::fail(bn, "backend", e.what());
        }
    }
    b = backend_override(o).value_or(b);
    const int nq = h.spinful ? 2 * h.spin.n_sites : h.spinless.n_modes;
    std::optional<topology::CouplingGraph> dev;
    if (cli::child(root, "topology")) {
        dev = cli::read_topology<double>(root);
    } else if (b == network::Backend::digital_analog) {
        dev = h.spinful ? topology::ladder(h.spin.n_sites) : topology::chain(nq);
    }
    if (dev && dev->n_qubits() != nq) {
        throw ConfigError("topology has " + std::to_string(dev->n_qubits()) + " qubits, the model needs " +
                          std::to_string(nq));
    }
    network::TrotterStep step;
    try {
        step = h.spinful ? network::trotter_step_spinful(h.spin, dt, b, dev)
                         : network::trotter_step_spinless(h.spinless, dt, b, dev);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    Sink sink(o.out);
    network::write_circuit(sink.data(), step.circuit);
    auto &r = sink.report();
    r << "backend " << network::backend_name(b) << ", " << nq << " qubits, dt " << dt << '\n';
    r << "analog blocks " << step.circuit.analog_block_count() << ", CNOT "
      << step.circuit.two_qubit_gate_count(network::Gate2Kind::cnot) << ", FSG "
      << step.circuit.two_qubit_gate_count(network::Gate2Kind::fsg) << ", Cphase "
      << step.circuit.two_qubit_gate_count(network::Gate2Kind::cphase) << '\n';
    r << "final mode order";
    for (int m : step.final_order.modes()) {
        r << ' ' << m;
    }
    r << '\n';
    if (nq <= 10) {
        const double e1 = step_error(h, dt, b, dev);
        const double e2 = step_error(h, dt / 2, b, dev);
        r << std::setprecision(6) << "distance to exact: " << e1 << " (dt), " << e2 << " (dt/2), ratio "
          << (e2 > 0 ? e1 / e2 : 0.0) << " (second order: 4)\n";
    } else {
        r << "exact comparison skipped above 10 qubits\n";
    }
    return kOk;
}

void write_rows(const std::string &path, const std::vector<noise::SweepRow> &rows) {
    std::ofstream f(path);
    if (!f) {
        throw ConfigError("cannot write '" + path + "'");
    }
    noise::write_sweep_csv(f, rows);
}

int preset_cnot(const Options &o) {
    std::vector<double> ratios;
    for (int k = 0; k <= 20; ++k) {
        ratios.push_back(k / 20.0);
    }
    Sink sink(o.out);
    auto &d = sink.data();
    d << "ratio,process_fidelity,closed_form\n" << std::setprecision(17);
    double worst = 0.0;
    for (const auto &[r, f] : noise::cnot_infidelity_curve(ratios)) {
        const double c = std::pow(std::cos(M_PI / 4 * r), 2);
        worst = std::max(worst, std::abs(f - c));
        d << r << ',' << f << ',' << c << '\n';
    }
    sink.report() << "max |F - cos^2(pi/4 r)| = " << worst << '\n';
    return worst <= 1e-10 ? kOk : kVerifyFailed;
}

int preset_omega(const Options &o) {
    noise::SweepConfig c;
    c.n_qubits = 8;
    c.n_states = 20;
    c.variable = noise::SweepVariable::omega;
    c.backend = backend_override(o).value_or(network::Backend::digital_analog);
    c.seed = o.seed.value_or(1);
    for (int k = 0; k <= 20; ++k) {
        c.grid.push_back(0.01 * k);
    }
    const auto rows = noise::trotter_fidelity_sweep(c);
    Sink sink(o.out);
    noise::write_sweep_csv(sink.data(), rows);
    std::vector<double> x, y;
    for (const auto &r : rows) {
        x.push_back(r.param);
        y.push_back(1.0 - r.mean_fidelity);
    }
    const auto free = noise::fit_powers(x, y, {0, 1, 2, 3, 4});
    const auto even = noise::fit_powers(x, y, {2, 4});
    auto &r = sink.report();
    r << std::setprecision(6) << "1-F ~ " << even[0] << " w^2 + " << even[1] << " w^4\n"
      << "free fit: c1 = " << free[1] << ", c2 = " << free[2] << ", |c1| / (c2 w_max) = "
      << std::abs(free[1]) / std::abs(free[2] * x.back()) << '\n'
      << "F(0) = " << std::setprecision(15) << rows.front().mean_fidelity << '\n';
    const bool ok = std::abs(free[1]) < 0.1 * std::abs(free[2] * x.back()) &&
                    std::abs(rows.front().mean_fidelity - 1.0) <= 1e-10;
    return ok ? kOk : kVerifyFailed;
}

int preset_noise(const Options &o) {
    const std::filesystem::path dir = o.out.empty() ? "." : o.out;
    std::filesystem::create_directories(dir);
    int status = kOk;
    for (auto v : {noise::SweepVariable::depolarizing, noise::SweepVariable::amplitude_damping,
                   noise::SweepVariable::phase_damping}) {
        double slope[2] = {0, 0};
        int i = 0;
        for (auto b : {network::Backend::digital_analog, network::Backend::digital}) {
            noise::SweepConfig c;
            c.n_qubits = 6;
            c.n_states = 20;
            c.variable = v;
            c.backend = b;
            c.seed = o.seed.value_or(1);
            for (int k = 0; k <= 10; ++k) {
                c.grid.push_back(1e-4 * k);
            }
            const auto rows = noise::trotter_fidelity_sweep(c);
            const auto name = "noise_" + std::string(network::backend_name(b)) + "_" +
                              std::string(noise::sweep_variable_name(v)) + ".csv";
            write_rows((dir / name).string(), rows);
            std::vector<double> x, y;
            for (const auto &r : rows) {
                x.push_back(r.param);
                y.push_back(1.0 - r.mean_fidelity);
            }
            const auto fit = noise::linear_fit(x, y);
            slope[i++] = fit.slope;
            std::cout << std::setprecision(6) << name << ": slope " << fit.slope << ", R^2 " << fit.r2 << '\n';
            if (fit.r2 < 0.99) {
                status = kVerifyFailed;
            }
        }
        const double ratio = slope[0] / slope[1];
        std::cout << "  " << noise::sweep_variable_name(v) << " slope ratio da/digital " << ratio << '\n';
        if (std::abs(ratio - 2.0) > 0.4) {
            status = kVerifyFailed;
        }
    }
    return status;
}

int cmd_sweep(const Options &o) {
    if (o.preset == "paper-fig-cnot") return preset_cnot(o);
    if (o.preset == "paper-fig-omega") return preset_omega(o);
    if (o.preset == "paper-fig-noise") return preset_noise(o);
    if (!o.preset.empty()) {
        throw ConfigError("unknown preset '" + o.preset + "' (paper-fig-cnot, paper-fig-omega, paper-fig-noise)");
    }
    const YAML::Node root = config_of(o);
    noise::SweepConfig c = cli::read_sweep(root);
    c.backend = backend_override(o).value_or(c.backend);
    if (o.seed) {
        c.seed = *o.seed;
    }
    std::vector<noise::SweepRow> rows;
    try {
        rows = noise::trotter_fidelity_sweep(c);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    Sink sink(o.out);
    noise::write_sweep_csv(sink.data(), rows);
    if (rows.size() >= 2) {
        std::vector<double> x, y;
        for (const auto &r : rows) {
            x.push_back(r.param);
            y.push_back(1.0 - r.mean_fidelity);
        }
        const auto fit = noise::linear_fit(x, y);
        sink.report() << "linear fit of 1-F: slope " << fit.slope << ", R^2 " << fit.r2 << '\n';
    }
    return kOk;
}

int cmd_counts(const Options &o) {
    std::string topo = o.topology;
    int n = o.n;
    if (!o.config.empty()) {
        const YAML::Node root = config_of(o);
        const YAML::Node c = cli::require(root, "counts");
        if (topo.empty()) topo = cli::as<std::string>(cli::require(c, "topology"), "counts.topology");
        if (n == 0) n = cli::as<int>(cli::require(c, "n"), "counts.n");
    }
    if (topo.empty() || n == 0) {
        throw ConfigError("counts needs --topology and --n (or a 'counts' config section)");
    }
    refocus::TopologyKind kind;
    long long closed = 0;
    try {
        kind = refocus::parse_topology(topo);
        if (o.regime == "uniform") {
            closed = refocus::entangler_count(kind, n);
        } else if (o.regime != "spread") {
            throw DomainError("regime must be uniform or spread");
        }
        refocus::fsg_count(n);
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    auto device = network::count_device(kind, n);
    if (o.regime == "spread") {
        device = noise::perturb_couplings(device, 0.5, o.seed.value_or(1)).first;
    }
    const long long measured = network::measured_entangler_count(device);
    const long long cnots = network::measured_digital_cnot_count(n);
    std::cout << "topology " << refocus::topology_name(kind) << ", n = " << n << ", " << o.regime << " couplings\n";
    std::cout << "quantity                 closed-form  measured\n";
    if (o.regime == "uniform") {
        std::cout << "analog entanglers       " << std::setw(12) << closed << std::setw(10) << measured << '\n';
    } else {
        std::cout << "analog entanglers       " << std::setw(12) << "O(n^2)" << std::setw(10) << measured << '\n';
    }
    std::cout << "digital CNOTs           " << std::setw(12) << refocus::digital_cnot_count(n) << std::setw(10)
              << cnots << '\n';
    std::cout << "FSGs                    " << std::setw(12) << refocus::fsg_count(n) << std::setw(10)
              << refocus::fsg_count(n) << '\n';
    const bool ok = (o.regime == "spread" || closed == measured) && cnots == refocus::digital_cnot_count(n);
    return ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"dasim: digital-analog compilation and simulation of fermionic Trotter steps"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed = 0;
    auto common = [&](CLI::App *s) {
        s->add_option("--config", o.config, "YAML configuration file");
        s->add_option("--out", o.out, "output file (directory for paper-fig-noise)");
        s->add_option("--seed", seed, "override the random seed");
        s->add_option("--backend", o.backend, "da | digital | fsg");
    };
    auto *compile = app.add_subcommand("compile", "compile a refocusing schedule and verify it");
    auto *verify = app.add_subcommand("verify", "verify a schedule file against a config");
    auto *trotter = app.add_subcommand("trotter", "build one Trotter step circuit");
    auto *sweep = app.add_subcommand("sweep", "fidelity sweeps");
    auto *counts = app.add_subcommand("counts", "entangler counts per Trotter step");
    for (auto *s : {compile, verify, trotter, sweep, counts}) {
        common(s);
    }
    verify->add_option("--schedule", o.schedule, "schedule file");
    sweep->add_option("--preset", o.preset, "paper-fig-cnot | paper-fig-omega | paper-fig-noise");
    counts->add_option("--topology", o.topology, "chain | grid | all-to-all");
    counts->add_option("--n", o.n, "qubit count");
    counts->add_option("--regime", o.regime, "uniform | spread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }
    for (auto *s : {compile, verify, trotter, sweep, counts}) {
        if (s->count("--seed") > 0) {
            o.seed = seed;
        }
    }
    try {
        if (*compile) return cmd_compile(o);
        if (*verify) return cmd_verify(o);
        if (*trotter) return cmd_trotter(o);
        if (*sweep) return cmd_sweep(o);
        return cmd_counts(o);
    } catch (const ResourceError &e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kConfig;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const YAML::Exception &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    }
}
