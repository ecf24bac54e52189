#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qws/codes.hpp"
#include "qws/noise.hpp"
#include "qws/tables.hpp"

namespace qws {

enum class LogicalState : uint8_t { ZeroL, PlusL };
enum class DecoderSource : uint8_t { Builtin, Bruteforce };

struct ExperimentConfig {
    std::string code = "rotated-d3";
    bool cut = true;
    LogicalState state = LogicalState::ZeroL;
    uint32_t rounds = 40; // noisy rounds
    uint64_t shots = 1;
    double p2 = 0.0;
    enum class P1Rule : uint8_t { Zero, HalfP2, Explicit } p1_rule = P1Rule::Zero;
    double p1_value = 0.0;
    uint64_t seed = 0;
    DecoderSource decoder = DecoderSource::Bruteforce;
    int threads = 1;
    bool physical_recovery = false; // apply recoveries to the state instead of the frame

    double p1() const {
        switch (p1_rule) {
            case P1Rule::Zero: return 0.0;
            case P1Rule::HalfP2: return p2 / 2.0;
            case P1Rule::Explicit: return p1_value;
        }
        return 0.0;
    }
};

struct ExperimentResult {
    uint64_t shots = 0;
    uint64_t failures = 0;
    double p_total = 0;
    double p_round = 0;
    double stderr_ = 0; // binomial standard error on p_total
};

/// One scheduled syndrome-measurement round: the gate moments plus the
/// measurement phase (H on X carriers, MeasZ, ResetZ, H again).
struct ScheduledRound {
    Circuit circ;
    std::vector<NoiseLocation> locs;
    // Eight (anc entity, measured position) pairs: Z faces 9,11,14,16 then
    // X faces 10,12,13,15.
    std::vector<std::pair<uint32_t, uint32_t>> meas;
};

/// Precomputed engine for the rotated-code memory experiment.
class RotatedMemory {
  public:
    RotatedMemory(bool cut, DecoderSource decoder);

    /// A single injected fault (used by the certificate and table tools).
    struct Injection {
        Parity round_parity;   // which scheduled round the location list indexes
        uint32_t round_index;  // 1-based noisy round number (1..rounds)
        uint32_t location;     // index into that round's NoiseLocation list
        uint8_t pauli0, pauli1;
    };

    /// Runs one shot; returns true on logical failure.
    bool run_shot(uint64_t seed, uint64_t shot_index, const NoiseModel& nm, LogicalState state,
                  uint32_t rounds, const Injection* inject, bool physical_recovery) const;

    const ScheduledRound& round(Parity p) const { return p == Parity::Odd ? odd_ : even_; }
    const LookupTable& table(CheckType c, Parity p) const;
    const CodeCircuit& code(Parity p) const { return p == Parity::Odd ? odd_code_ : even_code_; }
    bool cut() const { return cut_; }

  private:
    bool cut_;
    CodeCircuit odd_code_, even_code_;
    ScheduledRound odd_, even_;
    LookupTable tz_odd_, tz_even_, tx_odd_, tx_even_;
};

ScheduledRound make_scheduled_round(const CodeCircuit& code);

ExperimentResult run_memory_experiment(const ExperimentConfig& cfg);

/// p_round = 1 - (1 - P_total)^(1/rounds).
double per_round_probability(double p_total, uint32_t rounds);

struct FitPoint {
    double p2;
    double p_round;
    double stderr_;
};

struct FitResult {
    double alpha = 0;
    double residual = 0; // relative RMS against alpha * p2^2
    std::vector<FitPoint> points;
};

/// Inverse-variance weighted least squares for p_round = alpha * p2^2.
FitResult fit_quadratic(const std::vector<FitPoint>& points);

/// Log-log slope of p_round vs p2 (least squares on the logs).
double loglog_slope(const std::vector<FitPoint>& points);

struct CertificateResult {
    uint64_t injections = 0;
    uint64_t failures = 0;
    std::vector<std::string> failing; // descriptions of failing injections
};

/// Exhaustive single-fault injection over two consecutive noisy rounds:
/// every p1 location times {X,Y,Z} plus every CNOT+SWAP times the fifteen
/// two-qubit Paulis, for the given logical state.
CertificateResult fault_injection_certificate(const RotatedMemory& mem, LogicalState state,
                                              uint64_t seed);

struct SweepRow {
    double p1, p2;
    ExperimentResult result;
};

std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const std::vector<double>& p2s);

/// CSV with the fixed header
/// code,p1,p2,rounds,shots,failures,p_total,p_round,stderr.
std::string sweep_csv(const ExperimentConfig& base, const std::vector<SweepRow>& rows,
                      const FitResult* fit);

} // namespace qws
