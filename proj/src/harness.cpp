#include "itc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace itc {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        if (auto t = trim(item); !t.empty()) out.push_back(t);
    if (out.empty()) throw std::invalid_argument("empty list '" + value + "'");
    return out;
}

bool parse_bool(const std::string& v) {
    std::string s = v;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

template <class T>
T parse_number(const std::string& v) {
    std::size_t pos = 0;
    T out;
    if constexpr (std::is_floating_point_v<T>)
        out = static_cast<T>(std::stod(v, &pos));
    else if constexpr (std::is_unsigned_v<T>)
        out = static_cast<T>(std::stoull(v, &pos));
    else
        out = static_cast<T>(std::stoll(v, &pos));
    if (pos != v.size()) throw std::invalid_argument("not a number: '" + v + "'");
    return out;
}

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Memory: return "memory";
        case Mode::Validate: return "validate";
        case Mode::Export: return "export";
        case Mode::Trace: return "trace";
    }
    return "?";
}

Mode mode_from_string(const std::string& name) {
    if (name == "memory") return Mode::Memory;
    if (name == "validate") return Mode::Validate;
    if (name == "export") return Mode::Export;
    if (name == "trace") return Mode::Trace;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (L.empty() || p.empty() || sectors.empty()) throw std::invalid_argument("config: lists must be nonempty");
    for (int l : L)
        if (l < 2) throw std::invalid_argument("config: L must be at least 2");
    for (double x : p)
        if (!(x >= 0 && x <= 1)) throw std::invalid_argument("config: p must lie in [0, 1]");
    for (double x : q)
        if (!(x >= 0 && x <= 1)) throw std::invalid_argument("config: q must lie in [0, 1]");
    if (trials < 1) throw std::invalid_argument("config: trials must be at least 1");
    if (rounds < 0) throw std::invalid_argument("config: rounds must be nonnegative");
    if (presentation == Presentation::Toric && (mode == Mode::Memory || mode == Mode::Trace))
        throw std::invalid_argument("config: decoding needs the kvc or overcomplete presentation");
}

std::vector<std::pair<double, double>> ExperimentConfig::noise_points() const {
    std::vector<std::pair<double, double>> out;
    for (double pv : p) {
        if (q.empty())
            out.emplace_back(pv, pv);
        else
            for (double qv : q) out.emplace_back(pv, qv);
    }
    return out;
}

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(raw_value);
    if (key == "geometry") {
        cfg.geometry = geometry_kind_from_string(value);
    } else if (key == "L") {
        cfg.L.clear();
        for (const auto& s : split_list(value)) cfg.L.push_back(parse_number<int>(s));
    } else if (key == "p") {
        cfg.p.clear();
        for (const auto& s : split_list(value)) cfg.p.push_back(parse_number<double>(s));
    } else if (key == "q") {
        cfg.q.clear();
        if (value != "p")
            for (const auto& s : split_list(value)) cfg.q.push_back(parse_number<double>(s));
    } else if (key == "rounds") {
        cfg.rounds = parse_number<int>(value);
    } else if (key == "trials") {
        cfg.trials = parse_number<std::size_t>(value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value);
    } else if (key == "sector") {
        cfg.sectors.clear();
        if (value == "both" || value == "ZX" || value == "XZ")
            cfg.sectors = {Sector::Z, Sector::X};
        else
            for (const auto& s : split_list(value)) cfg.sectors.push_back(sector_from_string(s));
    } else if (key == "mode") {
        cfg.mode = mode_from_string(value);
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "presentation") {
        cfg.presentation = presentation_from_string(value);
    } else if (key == "noisy-boundary-measurements") {
        cfg.noisy_boundary_measurements = parse_bool(value);
    } else if (key == "serial") {
        cfg.serial = parse_bool(value);
    } else if (key == "matcher") {
        if (value == "exact")
            cfg.matcher = MatcherKind::Exact;
        else if (value == "greedy")
            cfg.matcher = MatcherKind::Greedy;
        else
            throw std::invalid_argument("unknown matcher '" + value + "'");
    } else {
        throw std::invalid_argument("unknown setting '" + raw_key + "'");
    }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

std::string describe(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["geometry"] = to_string(cfg.geometry);
    j["L"] = cfg.L;
    j["presentation"] = to_string(cfg.presentation);
    j["p"] = cfg.p;
    j["q"] = cfg.q.empty() ? nlohmann::ordered_json("p") : nlohmann::ordered_json(cfg.q);
    j["rounds"] = cfg.rounds;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    std::vector<std::string> sectors;
    for (auto s : cfg.sectors) sectors.push_back(to_string(s));
    j["sector"] = sectors;
    j["noisy_boundary_measurements"] = cfg.noisy_boundary_measurements;
    j["mode"] = to_string(cfg.mode);
    j["out"] = cfg.out;
    return j.dump();
}

std::string to_json_line(const TrialRecord& r, const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["geometry"] = to_string(cfg.geometry);
    j["L"] = r.L;
    j["p"] = r.p;
    j["q"] = r.q;
    j["rounds"] = cfg.rounds;
    j["seed"] = cfg.seed;
    j["noisy_boundary_measurements"] = cfg.noisy_boundary_measurements;
    j["trial"] = r.trial;
    auto& sectors = j["sectors"] = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < r.sectors.size(); ++s) {
        nlohmann::ordered_json e;
        e["sector"] = to_string(r.sectors[s]);
        e["syndrome_weights"] = r.syndrome_weights[s];
        e["verdicts"] = r.verdicts[s];
        sectors.push_back(e);
    }
    j["failed"] = r.failed;
    j["wall_ms"] = r.wall_ms;
    return j.dump();
}

std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1 + z2 / nn;
    const double center = (phat + z2 / (2 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

MemoryExperiment::MemoryExperiment(const ExperimentConfig& cfg, int L)
    : cfg_(cfg), L_(L), code_(build_itc(Geometry{cfg.geometry, L, false}, cfg.presentation)) {
    if (cfg.geometry != GeometryKind::Torus3) code_.build_logicals();
    for (auto s : cfg.sectors) {
        maps_.push_back(std::make_unique<SyndromeMaps>(build_maps(code_, s)));
        decoders_.push_back(std::make_unique<Decoder>(*maps_.back(), cfg.matcher));
    }
}

TrialRecord MemoryExperiment::run_trial(std::size_t trial, double p, double q) const {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial = trial;
    rec.L = L_;
    rec.p = p;
    rec.q = q;
    const NoiseModel model{p, q, cfg_.noisy_boundary_measurements, cfg_.seed};
    for (std::size_t si = 0; si < maps_.size(); ++si) {
        const auto& m = *maps_[si];
        const auto& dec = *decoders_[si];
        BitVector eps(m.dim_Q());
        std::vector<std::size_t> weights;
        for (int round = 0; round <= cfg_.rounds; ++round) {
            BitVector mu(m.dim_M());
            if (round < cfg_.rounds) {
                auto [e_new, mu_new] = sample(model, m, trial, static_cast<std::uint64_t>(round));
                eps ^= e_new;
                mu = std::move(mu_new);
            }
            const BitVector zeta = m.delta_M.apply(eps) ^ mu;
            const DecodeResult r = dec.decode(zeta, static_cast<std::size_t>(round));
            eps ^= r.eps_hat;
            weights.push_back(m.boundary_S.apply(eps).popcount());
        }
        auto verdict = logical_failures(code_, m.sector, eps);
        rec.failed = rec.failed || std::any_of(verdict.begin(), verdict.end(), [](bool b) { return b; });
        rec.sectors.push_back(m.sector);
        rec.syndrome_weights.push_back(std::move(weights));
        rec.verdicts.push_back(std::move(verdict));
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<TrialRecord> MemoryExperiment::run(double p, double q, bool serial) const {
    const auto n = static_cast<std::ptrdiff_t>(cfg_.trials);
    std::vector<TrialRecord> out(cfg_.trials);
    if (serial) {
        for (std::ptrdiff_t t = 0; t < n; ++t) out[static_cast<std::size_t>(t)] = run_trial(static_cast<std::size_t>(t), p, q);
        return out;
    }
    std::string error;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        try {
            out[static_cast<std::size_t>(t)] = run_trial(static_cast<std::size_t>(t), p, q);
        } catch (const std::exception& e) {
#pragma omp critical(itc_trial_error)
            if (error.empty()) error = "trial " + std::to_string(t) + ": " + e.what();
        }
    }
    if (!error.empty()) throw std::runtime_error(error);
    return out;
}

PointResult aggregate(const ExperimentConfig& cfg, int L, double p, double q, const std::vector<TrialRecord>& trials) {
    PointResult r;
    r.geometry = cfg.geometry;
    r.L = L;
    r.p = p;
    r.q = q;
    r.rounds = cfg.rounds;
    r.trials = trials.size();
    for (const auto& t : trials) r.failures += t.failed;
    r.rate = r.trials ? static_cast<double>(r.failures) / static_cast<double>(r.trials) : 0.0;
    std::tie(r.ci_low, r.ci_high) = wilson_interval(r.failures, r.trials);

    for (int round = 0; round < cfg.rounds; ++round) {
        double sum = 0, sum2 = 0;
        std::size_t count = 0;
        for (const auto& t : trials)
            for (const auto& w : t.syndrome_weights) {
                const double x = static_cast<double>(w[static_cast<std::size_t>(round)]);
                sum += x;
                sum2 += x * x;
                ++count;
            }
        const double mean = count ? sum / static_cast<double>(count) : 0.0;
        const double var = count > 1 ? (sum2 - static_cast<double>(count) * mean * mean) / static_cast<double>(count - 1) : 0.0;
        r.mean_weight.push_back(mean);
        r.stderr_weight.push_back(count ? std::sqrt(std::max(0.0, var) / static_cast<double>(count)) : 0.0);
    }
    return r;
}

MemoryReport run_memory(const ExperimentConfig& cfg) {
    cfg.validate();
    MemoryReport report;
    for (int L : cfg.L) {
        const MemoryExperiment exp(cfg, L);
        for (auto [p, q] : cfg.noise_points()) {
            auto trials = exp.run(p, q, cfg.serial);
            report.points.push_back(aggregate(cfg, L, p, q, trials));
            for (auto& t : trials) report.trials.push_back(std::move(t));
        }
    }
    return report;
}

void write_csv(std::ostream& out, const std::vector<PointResult>& points) {
    out << "geometry,L,p,q,T,trials,failures,rate,ci_low,ci_high\n";
    for (const auto& r : points)
        out << to_string(r.geometry) << ',' << r.L << ',' << fmt(r.p) << ',' << fmt(r.q) << ',' << r.rounds << ','
            << r.trials << ',' << r.failures << ',' << fmt(r.rate) << ',' << fmt(r.ci_low) << ',' << fmt(r.ci_high)
            << '\n';
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move '" + tmp.string() + "' to '" + path + "'");
    }
}

namespace {

void ensure_directory(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw std::runtime_error("cannot create output directory '" + dir + "'");
}

}  // namespace

void write_memory_outputs(const ExperimentConfig& cfg, const MemoryReport& report) {
    ensure_directory(cfg.out);
    std::ostringstream csv, lines;
    write_csv(csv, report.points);
    for (const auto& t : report.trials) lines << to_json_line(t, cfg) << '\n';
    write_file_atomic(cfg.out + "/aggregates.csv", csv.str());
    write_file_atomic(cfg.out + "/trials.jsonl", lines.str());
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::vector<std::string> run_export(const ExperimentConfig& cfg) {
    ensure_directory(cfg.out);
    // Render everything before touching the directory so a failure midway
    // leaves no partial output.
    std::vector<std::pair<std::string, std::string>> files;
    for (int L : cfg.L) {
        SubsystemCode code = build_itc(Geometry{cfg.geometry, L, false}, cfg.presentation);
        if (cfg.geometry != GeometryKind::Torus3) code.build_logicals();
        const std::string stem = cfg.out + "/" + to_string(cfg.geometry) + "_L" + std::to_string(L) + "_";
        std::ostringstream checks, stabs, red, logs, cells;
        write_sparse(checks, code.checks());
        write_sparse(stabs, code.stabilizers());
        write_sparse(red, code.redundancy());
        for (std::size_t i = 0; i < code.bare_logicals().size(); ++i) {
            const auto idx = std::to_string(i + 1);
            logs << to_sparse_line(code.bare_logicals()[i].x, "Xbar" + idx) << '\n'
                 << to_sparse_line(code.bare_logicals()[i].z, "Zbar" + idx) << '\n'
                 << to_sparse_line(code.dressed_logicals()[i].x, "Xdressed" + idx) << '\n'
                 << to_sparse_line(code.dressed_logicals()[i].z, "Zdressed" + idx) << '\n';
        }
        code.complex().dump(cells);
        files.emplace_back(stem + "checks.txt", checks.str());
        files.emplace_back(stem + "stabilizers.txt", stabs.str());
        files.emplace_back(stem + "redundancy.txt", red.str());
        files.emplace_back(stem + "logicals.txt", logs.str());
        files.emplace_back(stem + "cells.txt", cells.str());
        files.emplace_back(stem + "summary.json", summary_json(code) + "\n");
        if (cfg.presentation != Presentation::Toric)
            for (auto s : cfg.sectors) {
                const auto maps = build_maps(code, s);
                const std::pair<const char*, const SparseMatrix*> mats[] = {
                    {"dQ", &maps.boundary_Q}, {"dM", &maps.delta_M}, {"dS", &maps.delta_S},
                    {"dR", &maps.delta_R},    {"dSQ", &maps.boundary_S}};
                for (const auto& [name, mat] : mats) {
                    std::ostringstream o;
                    mat->write(o);
                    files.emplace_back(stem + "map_" + to_string(s) + "_" + name + ".txt", o.str());
                }
            }
    }
    std::vector<std::string> written;
    for (const auto& [path, content] : files) {
        write_file_atomic(path, content);
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> run_trace(const ExperimentConfig& cfg) {
    cfg.validate();
    const int L = cfg.L.front();
    const auto [p, q] = cfg.noise_points().front();
    const MemoryExperiment exp(cfg, L);
    std::vector<std::string> lines;
    const NoiseModel model{p, q, cfg.noisy_boundary_measurements, cfg.seed};
    for (std::size_t si = 0; si < cfg.sectors.size(); ++si) {
        const auto& m = exp.maps(si);
        BitVector eps(m.dim_Q());
        for (int round = 0; round <= cfg.rounds; ++round) {
            BitVector mu(m.dim_M());
            if (round < cfg.rounds) {
                auto [e_new, mu_new] = sample(model, m, 0, static_cast<std::uint64_t>(round));
                eps ^= e_new;
                mu = std::move(mu_new);
            }
            const BitVector zeta = m.delta_M.apply(eps) ^ mu;
            const auto r = exp.decoder(si).decode(zeta, static_cast<std::size_t>(round));
            auto j = nlohmann::ordered_json::parse(to_json(r, m, exp.code()));
            j["L"] = L;
            j["p"] = p;
            j["q"] = q;
            j["eps"] = eps.ones();
            j["mu"] = mu.ones();
            j["zeta"] = zeta.ones();
            j["omega"] = m.delta_R.apply(zeta).ones();
            eps ^= r.eps_hat;
            j["residual_weight"] = m.boundary_S.apply(eps).popcount();
            if (round == cfg.rounds) j["verdicts"] = logical_failures(exp.code(), m.sector, eps);
            lines.push_back(j.dump());
        }
    }
    return lines;
}

}  // namespace itc
