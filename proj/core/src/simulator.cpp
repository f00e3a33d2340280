#include "bcnoma/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace bcnoma::sim {
namespace {

constexpr long long kBlock = 4096;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Ratio-of-means accumulator. Plain means use o = 1.
struct Ratio {
  long long n = 0;
  double sd = 0, so = 0, sdd = 0, soo = 0, sdo = 0;

  void add(double d, double o) {
    ++n;
    sd += d;
    so += o;
    sdd += d * d;
    soo += o * o;
    sdo += d * o;
  }
  void merge(const Ratio& r) {
    n += r.n;
    sd += r.sd;
    so += r.so;
    sdd += r.sdd;
    soo += r.soo;
    sdo += r.sdo;
  }
  // Delta-method standard error; NaN mean when nothing was observed.
  Estimate finish() const {
    Estimate e;
    e.trials = so > 0.0 ? n : 0;
    if (!(so > 0.0)) {
      e.mean = std::numeric_limits<double>::quiet_NaN();
      return e;
    }
    const double r = sd / so;
    e.mean = r;
    if (n > 1) {
      const double ss = std::max(0.0, sdd - 2.0 * r * sdo + r * r * soo);
      const double obar = so / static_cast<double>(n);
      e.std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) / obar;
    }
    return e;
  }
};

// Runs body(rng, count, acc) per block and merges in block order, so the
// result does not depend on the thread count.
template <class Acc, class Body>
Acc run_blocks(long long trials, std::uint64_t seed, const RunOptions& opt, Body body) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  const long long blocks = (trials + kBlock - 1) / kBlock;
  std::vector<Acc> acc(static_cast<std::size_t>(blocks));
  auto one = [&](long long b) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    body(rng, std::min(kBlock, trials - b * kBlock), b * kBlock, acc[static_cast<std::size_t>(b)]);
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  if (opt.trace) threads = 1;
  threads = static_cast<unsigned>(std::min<long long>(threads, blocks));
  if (threads <= 1) {
    for (long long b = 0; b < blocks; ++b) one(b);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        (void)t;
        try {
          for (long long b; (b = next++) < blocks && !failed;) one(b);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  Acc total{};
  for (auto& a : acc) total.merge(a);
  return total;
}

class NodeSampler {
 public:
  explicit NodeSampler(const SystemConfig& cfg) : faded_(cfg.faded()) {
    if (faded_) gamma_ = std::gamma_distribution<double>(cfg.nakagami_m(), 1.0 / cfg.nakagami_m());
  }
  double radius(Rng& rng, double lo, double hi) {
    const double u = unif_(rng);
    return std::sqrt(lo * lo + u * (hi * hi - lo * lo));
  }
  double gain(Rng& rng) { return faded_ ? gamma_(rng) : 1.0; }

 private:
  bool faded_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::gamma_distribution<double> gamma_{1.0, 1.0};
};

int class_count(const PairingPolicy& policy) {
  if (auto* r = std::get_if<RegionDivision>(&policy)) return r->partition.count();
  if (std::holds_alternative<PowerDivision>(policy)) return 2;
  return 1;
}

void check_policy(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder) {
  cfg.validate();
  if (auto* r = std::get_if<RegionDivision>(&policy)) {
    const auto& rad = r->partition.radii;
    if (rad.size() < 2 || std::abs(rad.front() - cfg.inner_radius_m) > 1e-12 * cfg.outer_radius_m ||
        std::abs(rad.back() - cfg.outer_radius_m) > 1e-12 * cfg.outer_radius_m)
      throw std::invalid_argument("partition endpoints must match the annulus");
  }
  if (auto* p = std::get_if<PowerDivision>(&policy); p && !(p->beta_tilde > 0.0))
    throw std::invalid_argument("beta_tilde must be positive");
  if (ladder.size() < class_count(policy)) throw std::invalid_argument("ladder shorter than the class count");
}

int sic_sorted(const double* p, int n, double noise, double thr, std::vector<int>& order) {
  order.resize(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p[a] != p[b] ? p[a] > p[b] : a < b; });
  // suffix[k] = sum of powers ranked k.. n-1
  double rest = 0.0;
  for (int k = 0; k < n; ++k) rest += p[order[k]];
  int decoded = 0;
  for (int k = 0; k < n; ++k) {
    const double s = p[order[k]];
    rest -= s;
    const double interference = std::max(rest, 0.0);
    if (s / (interference + noise) >= thr)
      ++decoded;
    else
      break;
  }
  return decoded;
}

// Per-thread scratch for full-slot trials.
struct SlotEngine {
  const SystemConfig& cfg;
  const PairingPolicy& policy;
  const CoefficientLadder& ladder;
  LinkBudget link;
  int classes;
  double noise, thr;
  NodeSampler sampler;
  std::vector<NodeRealization> nodes;
  std::vector<std::vector<int>> buckets;
  std::vector<int> members, order;
  std::vector<double> powers;

  SlotEngine(const SystemConfig& c, const PairingPolicy& p, const CoefficientLadder& l, const LinkBudget& lk)
      : cfg(c), policy(p), ladder(l), link(lk), classes(class_count(p)), noise(c.noise_power_w()),
        thr(c.threshold()), sampler(c), buckets(static_cast<std::size_t>(classes)) {}

  void draw(Rng& rng) {
    nodes.resize(static_cast<std::size_t>(cfg.node_count));
    for (int i = 0; i < cfg.node_count; ++i) {
      auto& n = nodes[static_cast<std::size_t>(i)];
      n.id = i;
      n.distance_m = sampler.radius(rng, cfg.inner_radius_m, cfg.outer_radius_m);
      n.fading_gain = sampler.gain(rng);
    }
    classify(nodes, policy, cfg, ladder);
  }

  // Calls on_group(members, class_of_first, decoded) per mini-slot.
  template <class F>
  void serve(Rng& rng, F on_group) {
    for (auto& b : buckets) b.clear();
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) buckets[static_cast<std::size_t>(nodes[i].group)].push_back(i);
    std::size_t rounds = 0;
    for (auto& b : buckets) {
      std::shuffle(b.begin(), b.end(), rng);
      rounds = std::max(rounds, b.size());
    }
    for (std::size_t k = 0; k < rounds; ++k) {
      members.clear();
      for (auto& b : buckets)
        if (k < b.size()) members.push_back(b[k]);
      powers.resize(members.size());
      for (std::size_t j = 0; j < members.size(); ++j)
        powers[j] = received_power(nodes[static_cast<std::size_t>(members[j])], cfg, link);
      const int d = sic_sorted(powers.data(), static_cast<int>(members.size()), noise, thr, order);
      on_group(members, d);
    }
  }
};

struct SlotAcc {
  Ratio c_suc, normalized, m_n, p2, p1, m2, m1_near, m1_far;
  std::vector<Ratio> p_k;
  void merge(const SlotAcc& o) {
    c_suc.merge(o.c_suc);
    normalized.merge(o.normalized);
    m_n.merge(o.m_n);
    p2.merge(o.p2);
    p1.merge(o.p1);
    m2.merge(o.m2);
    m1_near.merge(o.m1_near);
    m1_far.merge(o.m1_far);
    if (p_k.size() < o.p_k.size()) p_k.resize(o.p_k.size());
    for (std::size_t k = 0; k < o.p_k.size(); ++k) p_k[k].merge(o.p_k[k]);
  }
};

void write_trace(std::ostream& os, long long trial, int slot, const std::vector<NodeRealization>& nodes,
                 const std::vector<int>& members, const std::vector<double>& powers, const std::vector<int>& order,
                 int decoded, double fraction, double bits) {
  nlohmann::json j;
  j["trial"] = trial;
  j["minislot"] = slot;
  auto ids = nlohmann::json::array(), pw = nlohmann::json::array(), cls = nlohmann::json::array();
  for (int k : order) {
    ids.push_back(nodes[static_cast<std::size_t>(members[static_cast<std::size_t>(k)])].id);
    cls.push_back(nodes[static_cast<std::size_t>(members[static_cast<std::size_t>(k)])].group);
    pw.push_back(powers[static_cast<std::size_t>(k)]);
  }
  j["ids"] = ids;
  j["classes"] = cls;
  j["powers_w"] = pw;
  j["duration_fraction"] = fraction;
  j["decoded"] = decoded;
  j["bits"] = bits;
  os << j.dump() << '\n';
}

// One node from subregion / class `cls`, drawn by the dedicated samplers.
NodeRealization draw_member(const SystemConfig& cfg, const PairingPolicy& policy, int cls, NodeSampler& s,
                            Rng& rng) {
  NodeRealization n;
  n.group = cls;
  if (auto* r = std::get_if<RegionDivision>(&policy)) {
    n.distance_m = s.radius(rng, r->partition.lower(cls), r->partition.upper(cls));
    n.fading_gain = s.gain(rng);
    return n;
  }
  if (auto* p = std::get_if<PowerDivision>(&policy)) {
    for (long long tries = 0; tries < 10'000'000; ++tries) {
      n.distance_m = s.radius(rng, cfg.inner_radius_m, cfg.outer_radius_m);
      n.fading_gain = s.gain(rng);
      const bool high = n.composite(cfg.path_loss_exponent) >= p->beta_tilde;
      if (high == (cls == 0)) return n;
    }
    throw std::runtime_error("power class is (numerically) empty; rejection sampling gave up");
  }
  n.distance_m = s.radius(rng, cfg.inner_radius_m, cfg.outer_radius_m);
  n.fading_gain = s.gain(rng);
  return n;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix(mix(master + 0x9E3779B97F4A7C15ULL) + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

std::vector<NodeRealization> sample_nodes(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  NodeSampler s(cfg);
  std::vector<NodeRealization> nodes(static_cast<std::size_t>(cfg.node_count));
  for (int i = 0; i < cfg.node_count; ++i) {
    auto& n = nodes[static_cast<std::size_t>(i)];
    n.id = i;
    n.distance_m = s.radius(rng, cfg.inner_radius_m, cfg.outer_radius_m);
    n.fading_gain = s.gain(rng);
  }
  return nodes;
}

std::vector<NodeRealization> sample_nodes(const SystemConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  return sample_nodes(cfg, rng);
}

void classify(std::vector<NodeRealization>& nodes, const PairingPolicy& policy, const SystemConfig& cfg,
              const CoefficientLadder& ladder) {
  const double alpha = cfg.path_loss_exponent;
  for (auto& n : nodes) {
    if (auto* r = std::get_if<RegionDivision>(&policy))
      n.group = r->partition.locate(n.distance_m);
    else if (auto* p = std::get_if<PowerDivision>(&policy))
      n.group = n.composite(alpha) >= p->beta_tilde ? 0 : 1;
    else
      n.group = 0;
    n.reflection_coeff = ladder[n.group];
  }
}

std::vector<MiniSlot> schedule(const std::vector<NodeRealization>& nodes, const PairingPolicy& policy,
                               const SystemConfig& cfg, Rng& rng) {
  const int classes = class_count(policy);
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(classes));
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const int g = nodes[static_cast<std::size_t>(i)].group;
    if (g < 0 || g >= classes) throw std::invalid_argument("node class outside the policy's classes");
    buckets[static_cast<std::size_t>(g)].push_back(i);
  }
  std::size_t rounds = 0;
  for (auto& b : buckets) {
    std::shuffle(b.begin(), b.end(), rng);
    rounds = std::max(rounds, b.size());
  }
  std::vector<MiniSlot> out;
  for (std::size_t k = 0; k < rounds; ++k) {
    MiniSlot s;
    for (auto& b : buckets)
      if (k < b.size()) s.members.push_back(b[k]);
    s.duration_fraction = static_cast<double>(s.members.size()) / cfg.node_count;
    out.push_back(std::move(s));
  }
  return out;
}

double received_power(const NodeRealization& node, const SystemConfig& cfg, const LinkBudget& link) {
  const double a = cfg.path_loss_exponent;
  if (link.model == LinkModel::Conventional)
    return dbm_to_watts(link.conventional_power_dbm) * node.fading_amplitude_sq() * std::pow(node.distance_m, -a);
  return cfg.reader_power_w() * node.reflection_coeff * node.fading_amplitude_sq() *
         std::pow(node.distance_m, -2.0 * a);
}

int sic_decode(const std::vector<double>& powers, double noise_w, double threshold) {
  std::vector<int> order;
  return sic_sorted(powers.data(), static_cast<int>(powers.size()), noise_w, threshold, order);
}

int sic_decode(const std::vector<NodeRealization>& group, const SystemConfig& cfg, const LinkBudget& link) {
  std::vector<double> p;
  for (const auto& n : group) p.push_back(received_power(n, cfg, link));
  return sic_decode(p, cfg.noise_power_w(), cfg.threshold());
}

TrialOutcome run_trial(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                       Rng& rng, const LinkBudget& link) {
  check_policy(cfg, policy, ladder);
  auto nodes = sample_nodes(cfg, rng);
  classify(nodes, policy, cfg, ladder);
  TrialOutcome out;
  std::vector<int> order;
  for (const auto& slot : schedule(nodes, policy, cfg, rng)) {
    MiniSlotRecord rec;
    rec.duration_fraction = slot.duration_fraction;
    std::vector<double> p;
    for (int m : slot.members) p.push_back(received_power(nodes[static_cast<std::size_t>(m)], cfg, link));
    rec.decoded = sic_sorted(p.data(), static_cast<int>(p.size()), cfg.noise_power_w(), cfg.threshold(), order);
    for (int k : order) {
      rec.ids.push_back(nodes[static_cast<std::size_t>(slot.members[static_cast<std::size_t>(k)])].id);
      rec.powers_w.push_back(p[static_cast<std::size_t>(k)]);
    }
    rec.bits = rec.decoded * slot.duration_fraction * cfg.slot_bits;
    out.bits_decoded += rec.bits;
    out.bits_offered += static_cast<double>(slot.members.size()) * slot.duration_fraction * cfg.slot_bits;
    out.minislots.push_back(std::move(rec));
  }
  return out;
}

SlotMetrics estimate_metrics(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                             long long trials, std::uint64_t seed, const LinkBudget& link, const RunOptions& opt) {
  check_policy(cfg, policy, ladder);
  const int full = class_count(policy);
  auto body = [&](Rng& rng, long long count, long long first, SlotAcc& acc) {
    SlotEngine eng(cfg, policy, ladder, link);
    acc.p_k.resize(static_cast<std::size_t>(full + 1));
    std::vector<double> pk(static_cast<std::size_t>(full + 1));
    for (long long t = 0; t < count; ++t) {
      eng.draw(rng);
      double bits = 0, offered = 0, full_dec = 0, full_n = 0, pair_dec = 0, pairs = 0, two = 0, one = 0;
      double near_dec = 0, near_n = 0, far_dec = 0, far_n = 0;
      std::fill(pk.begin(), pk.end(), 0.0);
      int slot = 0;
      eng.serve(rng, [&](const std::vector<int>& members, int d) {
        const double n = static_cast<double>(members.size());
        const double frac = n / cfg.node_count;
        bits += d * frac * cfg.slot_bits;
        offered += n * frac * cfg.slot_bits;
        if (static_cast<int>(members.size()) == full) {
          full_dec += d;
          full_n += 1;
          pk[static_cast<std::size_t>(d)] += 1;
        }
        if (members.size() == 2) {
          pair_dec += d;
          pairs += 1;
          two += d == 2;
          one += d == 1;
        }
        if (members.size() == 1) {
          const int g = eng.nodes[static_cast<std::size_t>(members[0])].group;
          (g == 0 ? near_dec : far_dec) += d;
          (g == 0 ? near_n : far_n) += 1;
        }
        if (opt.trace)
          write_trace(*opt.trace, first + t, slot, eng.nodes, members, eng.powers, eng.order, d, frac,
                      d * frac * cfg.slot_bits);
        ++slot;
      });
      acc.c_suc.add(bits, 1.0);
      acc.normalized.add(bits, offered);
      acc.m_n.add(full_dec, full_n);
      for (int k = 0; k <= full; ++k) acc.p_k[static_cast<std::size_t>(k)].add(pk[static_cast<std::size_t>(k)], full_n);
      acc.p2.add(two, pairs);
      acc.p1.add(one, pairs);
      acc.m2.add(pair_dec, pairs);
      acc.m1_near.add(near_dec, near_n);
      acc.m1_far.add(far_dec, far_n);
    }
  };
  const SlotAcc acc = run_blocks<SlotAcc>(trials, seed, opt, body);
  SlotMetrics m;
  m.c_suc = acc.c_suc.finish();
  m.normalized = acc.normalized.finish();
  m.m_n = acc.m_n.finish();
  for (const auto& r : acc.p_k) m.p_k.push_back(r.finish());
  m.p2 = acc.p2.finish();
  m.p1 = acc.p1.finish();
  m.m2 = acc.m2.finish();
  m.m1_near = acc.m1_near.finish();
  m.m1_far = acc.m1_far.finish();
  return m;
}

namespace {
struct PairAcc {
  Ratio p2, p1, m2;
  void merge(const PairAcc& o) {
    p2.merge(o.p2);
    p1.merge(o.p1);
    m2.merge(o.m2);
  }
};
struct OneAcc {
  Ratio r;
  void merge(const OneAcc& o) { r.merge(o.r); }
};
struct GroupAcc {
  Ratio m_n;
  std::vector<Ratio> p_k;
  long long failures = 0;
  void merge(const GroupAcc& o) {
    m_n.merge(o.m_n);
    if (p_k.size() < o.p_k.size()) p_k.resize(o.p_k.size());
    for (std::size_t k = 0; k < o.p_k.size(); ++k) p_k[k].merge(o.p_k[k]);
    failures += o.failures;
  }
};
}  // namespace

PairMetrics estimate_pair(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                          long long trials, std::uint64_t seed, const RunOptions& opt) {
  check_policy(cfg, policy, ladder);
  if (class_count(policy) != 2) throw std::invalid_argument("pair sampler needs a two-class policy");
  const double noise = cfg.noise_power_w(), thr = cfg.threshold();
  auto body = [&](Rng& rng, long long count, long long, PairAcc& acc) {
    NodeSampler s(cfg);
    std::vector<int> order;
    double p[2];
    for (long long t = 0; t < count; ++t) {
      for (int c = 0; c < 2; ++c) {
        NodeRealization n = draw_member(cfg, policy, c, s, rng);
        n.reflection_coeff = ladder[c];
        p[c] = received_power(n, cfg);
      }
      const int d = sic_sorted(p, 2, noise, thr, order);
      acc.p2.add(d == 2, 1.0);
      acc.p1.add(d == 1, 1.0);
      acc.m2.add(d, 1.0);
    }
  };
  const PairAcc acc = run_blocks<PairAcc>(trials, seed, opt, body);
  return {acc.p2.finish(), acc.p1.finish(), acc.m2.finish()};
}

Estimate estimate_solo(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                       fading::Group which, long long trials, std::uint64_t seed, const RunOptions& opt) {
  check_policy(cfg, policy, ladder);
  const int c = which == fading::Group::Near ? 0 : 1;
  if (c >= class_count(policy)) throw std::invalid_argument("policy has no far class");
  const double noise = cfg.noise_power_w(), thr = cfg.threshold();
  auto body = [&](Rng& rng, long long count, long long, OneAcc& acc) {
    NodeSampler s(cfg);
    for (long long t = 0; t < count; ++t) {
      NodeRealization n = draw_member(cfg, policy, c, s, rng);
      n.reflection_coeff = ladder[c];
      acc.r.add(received_power(n, cfg) / noise >= thr, 1.0);
    }
  };
  return run_blocks<OneAcc>(trials, seed, opt, body).r.finish();
}

GroupMetrics estimate_group(const SystemConfig& cfg, const SubregionPartition& partition,
                            const CoefficientLadder& ladder, long long trials, std::uint64_t seed,
                            const RunOptions& opt) {
  const PairingPolicy policy = RegionDivision{partition};
  check_policy(cfg, policy, ladder);
  const int n = partition.count();
  const double noise = cfg.noise_power_w(), thr = cfg.threshold();
  auto body = [&](Rng& rng, long long count, long long, GroupAcc& acc) {
    NodeSampler s(cfg);
    std::vector<int> order;
    std::vector<double> p(static_cast<std::size_t>(n));
    acc.p_k.resize(static_cast<std::size_t>(n + 1));
    for (long long t = 0; t < count; ++t) {
      for (int c = 0; c < n; ++c) {
        NodeRealization node = draw_member(cfg, policy, c, s, rng);
        node.reflection_coeff = ladder[c];
        p[static_cast<std::size_t>(c)] = received_power(node, cfg);
      }
      const int d = sic_sorted(p.data(), n, noise, thr, order);
      acc.m_n.add(d, 1.0);
      for (int k = 0; k <= n; ++k) acc.p_k[static_cast<std::size_t>(k)].add(d == k, 1.0);
      acc.failures += d < n;
    }
  };
  const GroupAcc acc = run_blocks<GroupAcc>(trials, seed, opt, body);
  GroupMetrics g;
  g.m_n = acc.m_n.finish();
  for (const auto& r : acc.p_k) g.p_k.push_back(r.finish());
  g.failures = acc.failures;
  return g;
}

Estimate estimate_high_fraction(const SystemConfig& cfg, double beta_tilde, long long trials, std::uint64_t seed,
                                const RunOptions& opt) {
  cfg.validate();
  auto body = [&](Rng& rng, long long count, long long, OneAcc& acc) {
    NodeSampler s(cfg);
    NodeRealization n;
    for (long long t = 0; t < count; ++t) {
      n.distance_m = s.radius(rng, cfg.inner_radius_m, cfg.outer_radius_m);
      n.fading_gain = s.gain(rng);
      acc.r.add(n.composite(cfg.path_loss_exponent) >= beta_tilde, 1.0);
    }
  };
  return run_blocks<OneAcc>(trials, seed, opt, body).r.finish();
}

const char* to_string(BenchmarkSystem s) {
  switch (s) {
    case BenchmarkSystem::BackcomNoma: return "backcom_noma";
    case BenchmarkSystem::BackcomTdma: return "backcom_tdma";
    case BenchmarkSystem::ConvNoma: return "conv_noma";
    case BenchmarkSystem::ConvTdma: return "conv_tdma";
  }
  return "?";
}

BenchmarkResult benchmark(const SystemConfig& cfg, BenchmarkSystem system, long long trials, std::uint64_t seed,
                          const RunOptions& opt) {
  SystemConfig c = cfg;
  c.subregion_count = 2;
  const bool noma = system == BenchmarkSystem::BackcomNoma || system == BenchmarkSystem::ConvNoma;
  const bool conv = system == BenchmarkSystem::ConvNoma || system == BenchmarkSystem::ConvTdma;
  const PairingPolicy policy = noma ? PairingPolicy{RegionDivision{default_partition(c)}} : PairingPolicy{Tdma{}};
  const CoefficientLadder ladder = make_ladder(noma ? std::vector<double>{0.7, 0.7} : std::vector<double>{0.7});
  LinkBudget link;
  if (conv) link.model = LinkModel::Conventional;
  const SlotMetrics m = estimate_metrics(c, policy, ladder, trials, seed, link, opt);
  return {m.c_suc, m.normalized};
}

}  // namespace bcnoma::sim
