#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace udn {

inline constexpr double kSecondsPerYear = 365.25 * 24.0 * 3600.0;

/// How the embodied share is applied on top of operating energy.
enum class EmbodiedMode {
  kShareOfTotal,      // E_EM = f * E, so E = E_OP / (1 - f)
  kShareOfOperating,  // E_EM = f * E_OP, so E = E_OP * (1 + f)
};

/// Which per-BS throughput drives transmission power.
enum class ThroughputMode {
  kTransmitted,  // Y * W / n, counts relayed transmissions
  kDelivered,    // capacity / n
};

struct EnergyParams {
  double a = 7.85;
  double b = 71.5;             // W
  double p_norm = 1.0;         // W
  double th_0 = 1e9;           // bit/s
  double lifetime = 5.0 * kSecondsPerYear;  // s
  double embodied_fraction = 0.2;
  EmbodiedMode embodied_mode = EmbodiedMode::kShareOfTotal;
  ThroughputMode throughput_mode = ThroughputMode::kTransmitted;
};

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate_energy_params(const EnergyParams& params);

struct TrialMetrics {
  std::size_t n = 0;
  std::size_t connected_count = 0;
  std::size_t slot_count = 0;
  double k_n = 0.0;
  double y_n = 0.0;
  double capacity = 0.0;      // bit/s
  double th_avg = 0.0;        // bit/s, per the configured ThroughputMode
  double th_delivered = 0.0;  // capacity / n
  double p_tx = 0.0;          // W
  double p_op = 0.0;          // W
  double e_bs = 0.0;          // J
  double energy_efficiency = 0.0;  // (bit/s)/J
  double ee_bits_per_joule = 0.0;

  double connected_fraction() const {
    return n == 0 ? 0.0 : static_cast<double>(connected_count) / static_cast<double>(n);
  }
};

/// Y * W / k. Throws NoConnectedBs when k is absent.
double backhaul_capacity(double y_n, double link_rate, std::optional<double> k_n);

/// Y * W / n.
double average_bs_throughput(double y_n, double link_rate, std::size_t n);

double transmission_power(double th_avg, const EnergyParams& params);

double operating_power(double p_tx, const EnergyParams& params);

/// Total lifetime energy of one BS: operating energy plus the embodied share.
double bs_energy(double p_op, const EnergyParams& params);

double backhaul_energy_efficiency(double capacity, std::size_t n, double e_bs);

/// Full metric chain from schedule statistics. `k_n` empty means no BS is connected.
TrialMetrics compute_metrics(std::size_t n, std::size_t connected_count, std::size_t slot_count,
                             double y_n, std::optional<double> k_n, double link_rate,
                             const EnergyParams& params);

}  // namespace udn
