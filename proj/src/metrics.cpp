#include "udn/metrics.hpp"

#include "udn/errors.hpp"

namespace udn {

void validate_energy_params(const EnergyParams& params) {
  if (!(params.a > 0.0)) throw InvalidParameter("a must be > 0");
  if (!(params.b >= 0.0)) throw InvalidParameter("b must be >= 0");
  if (!(params.p_norm > 0.0)) throw InvalidParameter("p_norm must be > 0");
  if (!(params.th_0 > 0.0)) throw InvalidParameter("th_0 must be > 0");
  if (!(params.lifetime > 0.0)) throw InvalidParameter("lifetime must be > 0");
  if (!(params.embodied_fraction >= 0.0)) {
    throw InvalidParameter("embodied_fraction must be >= 0");
  }
  if (params.embodied_mode == EmbodiedMode::kShareOfTotal && !(params.embodied_fraction < 1.0)) {
    throw InvalidParameter("embodied_fraction must be < 1");
  }
}

double backhaul_capacity(double y_n, double link_rate, std::optional<double> k_n) {
  if (!k_n) throw NoConnectedBs();
  if (*k_n < 1.0) throw InvalidParameter("k_n must be >= 1");
  if (y_n < 0.0) throw InvalidParameter("Y_n must be >= 0");
  return y_n * link_rate / *k_n;
}

double average_bs_throughput(double y_n, double link_rate, std::size_t n) {
  if (n == 0) throw InvalidParameter("n must be >= 1");
  return y_n * link_rate / static_cast<double>(n);
}

double transmission_power(double th_avg, const EnergyParams& params) {
  if (th_avg < 0.0) throw InvalidParameter("throughput must be >= 0");
  return params.p_norm * (th_avg / params.th_0);
}

double operating_power(double p_tx, const EnergyParams& params) {
  if (p_tx < 0.0) throw InvalidParameter("p_tx must be >= 0");
  return params.a * p_tx + params.b;
}

double bs_energy(double p_op, const EnergyParams& params) {
  if (p_op < 0.0) throw InvalidParameter("p_op must be >= 0");
  const double f = params.embodied_fraction;
  const double e_op = p_op * params.lifetime;
  if (params.embodied_mode == EmbodiedMode::kShareOfOperating) return e_op * (1.0 + f);
  if (!(f < 1.0) || f < 0.0) throw InvalidParameter("embodied_fraction must be in [0, 1)");
  return e_op / (1.0 - f);
}

double backhaul_energy_efficiency(double capacity, std::size_t n, double e_bs) {
  if (n == 0) throw InvalidParameter("n must be >= 1");
  if (!(e_bs > 0.0)) throw InvalidParameter("BS energy must be > 0");
  return capacity / (static_cast<double>(n) * e_bs);
}

TrialMetrics compute_metrics(std::size_t n, std::size_t connected_count, std::size_t slot_count,
                             double y_n, std::optional<double> k_n, double link_rate,
                             const EnergyParams& params) {
  TrialMetrics m;
  m.n = n;
  m.connected_count = connected_count;
  m.slot_count = slot_count;
  m.capacity = backhaul_capacity(y_n, link_rate, k_n);
  m.k_n = *k_n;
  m.y_n = y_n;
  m.th_delivered = m.capacity / static_cast<double>(n);
  m.th_avg = params.throughput_mode == ThroughputMode::kTransmitted
                 ? average_bs_throughput(y_n, link_rate, n)
                 : m.th_delivered;
  m.p_tx = transmission_power(m.th_avg, params);
  m.p_op = operating_power(m.p_tx, params);
  m.e_bs = bs_energy(m.p_op, params);
  m.energy_efficiency = backhaul_energy_efficiency(m.capacity, n, m.e_bs);
  m.ee_bits_per_joule = m.energy_efficiency * params.lifetime;
  return m;
}

}  // namespace udn
