#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "itc/decoder.hpp"
#include "itc/noise.hpp"

namespace itc {

enum class Mode { Memory, Validate, Export, Trace };
std::string to_string(Mode m);
Mode mode_from_string(const std::string& name);

struct ExperimentConfig {
    GeometryKind geometry = GeometryKind::SlabT2xI;
    std::vector<int> L{3};
    Presentation presentation = Presentation::KVC;
    std::vector<double> p{0.01};
    std::vector<double> q;  // empty: q follows p
    int rounds = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<Sector> sectors{Sector::Z, Sector::X};
    bool noisy_boundary_measurements = true;
    std::string out = "itc_out";
    Mode mode = Mode::Memory;
    bool serial = false;  // run the single-threaded reference loop
    MatcherKind matcher = MatcherKind::Exact;

    void validate() const;
    /// (p, q) points in run order.
    std::vector<std::pair<double, double>> noise_points() const;
};

/// Applies one key=value setting (keys match the long CLI flags, with
/// dashes or underscores). Lists are comma separated.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
/// Flat key=value file; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
std::string describe(const ExperimentConfig& cfg);

struct TrialRecord {
    std::size_t trial = 0;
    int L = 0;
    double p = 0, q = 0;
    std::vector<Sector> sectors;
    /// Per sector: stabilizer-syndrome weight of the residual error after
    /// each noisy round, then after the noiseless readout round.
    std::vector<std::vector<std::size_t>> syndrome_weights;
    std::vector<std::vector<bool>> verdicts;  // per sector, per logical qubit
    bool failed = false;
    double wall_ms = 0;
};

std::string to_json_line(const TrialRecord& record, const ExperimentConfig& cfg);

struct PointResult {
    GeometryKind geometry = GeometryKind::SlabT2xI;
    int L = 0;
    double p = 0, q = 0;
    int rounds = 0;
    std::size_t trials = 0, failures = 0;
    double rate = 0, ci_low = 0, ci_high = 0;
    /// Mean and standard error of the residual syndrome weight per noisy
    /// round, pooled over sectors.
    std::vector<double> mean_weight, stderr_weight;
};

/// Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z = 1.959963984540054);

/// Code, maps and decoders for one lattice size; shared read-only by all
/// trials.
class MemoryExperiment {
public:
    MemoryExperiment(const ExperimentConfig& cfg, int L);

    TrialRecord run_trial(std::size_t trial, double p, double q) const;
    /// All trials of one noise point; OpenMP over trials unless serial.
    std::vector<TrialRecord> run(double p, double q, bool serial) const;

    const SubsystemCode& code() const noexcept { return code_; }
    const SyndromeMaps& maps(std::size_t sector_index) const { return *maps_[sector_index]; }
    const Decoder& decoder(std::size_t sector_index) const { return *decoders_[sector_index]; }
    int L() const noexcept { return L_; }

private:
    ExperimentConfig cfg_;
    int L_;
    SubsystemCode code_;
    std::vector<std::unique_ptr<SyndromeMaps>> maps_;
    std::vector<std::unique_ptr<Decoder>> decoders_;
};

PointResult aggregate(const ExperimentConfig& cfg, int L, double p, double q, const std::vector<TrialRecord>& trials);

struct MemoryReport {
    std::vector<PointResult> points;
    std::vector<TrialRecord> trials;
};
MemoryReport run_memory(const ExperimentConfig& cfg);

void write_csv(std::ostream& out, const std::vector<PointResult>& points);
/// <out>/aggregates.csv and <out>/trials.jsonl.
void write_memory_outputs(const ExperimentConfig& cfg, const MemoryReport& report);

struct ValidationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
};
ValidationReport run_validate(const ExperimentConfig& cfg);

/// Writes generator sets, syndrome maps and a JSON summary per lattice size
/// into <out>/. Returns the written paths.
std::vector<std::string> run_export(const ExperimentConfig& cfg);

/// JSON lines describing every round of trial 0 at the first (L, p, q).
std::vector<std::string> run_trace(const ExperimentConfig& cfg);

/// Writes via a temporary sibling and rename; throws with the path on failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace itc
