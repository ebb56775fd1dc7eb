#include "x0eis/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "x0eis/eisenstein.hpp"
#include "x0eis/version.hpp"

namespace x0eis {

using nlohmann::json;

namespace {

std::string shape_tag(const LevelShape& sh) {
  return "D=" + std::to_string(sh.D) + ",C=" + std::to_string(sh.C);
}

std::string index_tag(const EisIndex& idx) {
  return "M=" + std::to_string(idx.M) + ",L=" + std::to_string(idx.L) +
         ",f=" + std::to_string(idx.psi.f);
}

std::string rep_tag(const CuspRep& rep) {
  return "(" + std::to_string(rep.r) + "," + std::to_string(rep.s) + "," +
         std::to_string(rep.t) + "," + std::to_string(rep.x) + ")";
}

std::vector<VerifyRecord> suite_cusps(const LevelShape& shape) {
  VerifyRecord rec{"cusps/" + shape_tag(shape), true, ""};
  json detail;
  std::vector<CuspRep> reps = enumerate_cusps(shape);
  detail["count"] = reps.size();
  if (reps.size() != cusp_count(shape)) {
    rec.pass = false;
    detail["expected_count"] = cusp_count(shape);
  }
  const std::uint64_t N = shape.N();
  std::uint64_t wsum = 0;
  std::vector<Cusp> points;
  points.reserve(reps.size());
  for (const CuspRep& rep : reps) {
    if (!valid_rep(rep, shape)) rec.pass = false;
    Cusp p = rep_to_cusp(rep, shape);
    points.push_back(p);
    std::uint64_t w = cusp_width(rep);
    wsum += w;
    // independent width route through the denominator
    BigInt g;
    BigInt c2 = p.c * p.c, bn(static_cast<unsigned long>(N));
    mpz_gcd(g.get_mpz_t(), c2.get_mpz_t(), bn.get_mpz_t());
    if (bn / g != BigInt(static_cast<unsigned long>(w))) {
      rec.pass = false;
      detail["width_mismatch"] = rep_tag(rep);
    }
  }
  if (wsum != gamma0_index(N)) {
    rec.pass = false;
    detail["width_sum"] = wsum;
    detail["index"] = gamma0_index(N);
  }
  for (std::size_t i = 0; i < points.size() && rec.pass; ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (cusp_equiv(points[i], points[j], N)) {
        rec.pass = false;
        detail["equivalent_pair"] = rep_tag(reps[i]) + rep_tag(reps[j]);
        break;
      }
  rec.payload = detail.dump();
  return {rec};
}

std::vector<VerifyRecord> suite_eigen(const LevelShape& shape, const VerifyOptions& opts) {
  std::vector<VerifyRecord> out;
  for (const EisIndex& idx : enumerate_quadratic_indices(shape)) {
    VerifyRecord rec{"eigen/" + shape_tag(shape) + "/" + index_tag(idx), true, "{}"};
    EigenReport rep = verify_eigenform(idx, shape, opts.T, opts.primes);
    if (!rep.pass) {
      rec.pass = false;
      json detail;
      detail["first_ell"] = rep.first_ell;
      detail["first_n"] = rep.first_n;
      rec.payload = detail.dump();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<VerifyRecord> suite_constants(const LevelShape& shape) {
  std::vector<VerifyRecord> out;
  std::vector<CuspRep> reps = enumerate_cusps(shape);
  for (const EisIndex& idx : enumerate_quadratic_indices(shape)) {
    VerifyRecord rec{"constants/" + shape_tag(shape) + "/" + index_tag(idx), true, "{}"};
    json detail;
    QuadExt sum;
    for (const CuspRep& rep : reps) {
      QuadExt closed = constant_term(idx, rep, shape);
      QuadExt oracle = constant_term_oracle(idx, rep, shape);
      if (closed != oracle) {
        rec.pass = false;
        detail["mismatch_cusp"] = rep_tag(rep);
        break;
      }
      sum = sum + quad_scale(closed, Rational(static_cast<unsigned long>(cusp_width(rep))));
    }
    if (rec.pass && !quad_is_zero(sum)) {
      rec.pass = false;
      detail["residue_sum"] = quad_to_string(sum);
    }
    if (!rec.pass) rec.payload = detail.dump();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<VerifyRecord> suite_orders(const LevelShape& shape) {
  std::vector<VerifyRecord> out;
  const std::uint64_t N = shape.N();
  for (const EisIndex& idx : enumerate_quadratic_indices(shape)) {
    VerifyRecord rec{"orders/" + shape_tag(shape) + "/" + index_tag(idx), true, "{}"};
    json detail;
    QuadExt gen = r_lattice_gen(idx, shape);
    QuadExt brute = r_lattice_gen_brute(idx, shape);
    if (gen != brute && gen != -brute) {
      rec.pass = false;
      detail["lattice_closed"] = quad_to_string(gen);
      detail["lattice_brute"] = quad_to_string(brute);
    }
    CuspidalOrder ord = cuspidal_order(idx, shape);
    detail["order"] = ord.order.get_str();
    detail["inverted"] = ord.inverted;
    if (is_trivial(idx.psi) && (is_prime(N) || shape.D % 2 == 1)) {
      BigInt nml = order_nml(idx, shape);
      detail["order_nml"] = nml.get_str();
      if (odd_part(ord.order) != odd_part(nml)) rec.pass = false;
      if (!is_prime(N) && ord.order != nml) rec.pass = false;
    }
    rec.payload = detail.dump();
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<VerifyRecord> suite_lseries(const LevelShape& shape, const VerifyOptions& opts) {
  std::vector<VerifyRecord> out;
  for (const EisIndex& idx : enumerate_quadratic_indices(shape)) {
    for (std::uint64_t fc : opts.chi_conductors) {
      if (std::gcd(fc, shape.D) != 1) continue;
      QuadraticCharacter chi = quad_char(fc);
      VerifyRecord rec{"lseries/" + shape_tag(shape) + "/" + index_tag(idx) +
                           "/chi=" + std::to_string(fc),
                       true, "{}"};
      json detail;
      LSeriesReport rep = lseries_check(idx, shape, chi, opts.nmax);
      if (!rep.pass) {
        rec.pass = false;
        detail["first_n"] = rep.first_n;
      }
      detail["lambda"] = quad_to_string(lambda_value(idx, shape, chi));
      rec.payload = detail.dump();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

} // namespace

std::vector<VerifyRecord> run_suite(const std::string& suite, const LevelShape& shape,
                                    const VerifyOptions& opts) {
  if (suite == "cusps") return suite_cusps(shape);
  if (suite == "eigen") return suite_eigen(shape, opts);
  if (suite == "constants") return suite_constants(shape);
  if (suite == "orders") return suite_orders(shape);
  if (suite == "lseries") return suite_lseries(shape, opts);
  throw std::invalid_argument("run_suite: unknown suite " + suite);
}

SweepResult run_sweep(const SweepSpec& spec) {
  std::vector<LevelShape> shapes =
      spec.max_level > 0 ? shapes_up_to(spec.max_level) : spec.shapes;
  SweepResult res;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= shapes.size()) break;
      for (const std::string& suite : spec.suites) {
        std::vector<VerifyRecord> recs = run_suite(suite, shapes[i], spec.opts);
        std::lock_guard<std::mutex> lock(mu);
        res.records += recs.size();
        for (VerifyRecord& r : recs)
          if (!r.pass) {
            ++res.failed;
            res.failures.push_back(std::move(r));
          }
      }
    }
  };
  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::sort(res.failures.begin(), res.failures.end(),
            [](const VerifyRecord& a, const VerifyRecord& b) { return a.id < b.id; });
  return res;
}

std::vector<LevelShape> shapes_up_to(std::uint64_t max_level) {
  std::vector<LevelShape> out;
  for (std::uint64_t D = 1; D <= max_level; ++D) {
    if (!is_squarefree(D)) continue;
    for (std::uint64_t C : divisors(D))
      if (D * C <= max_level) out.push_back(LevelShape{D, C});
  }
  std::sort(out.begin(), out.end(), [](const LevelShape& a, const LevelShape& b) {
    if (a.N() != b.N()) return a.N() < b.N();
    return a.D < b.D;
  });
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_key(const std::string& request) {
  std::string salted = request + "#v" + kVersion + "#s" + std::to_string(kSchemaVersion);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(salted)));
  return std::string(buf);
}

std::optional<std::string> cache_load(const std::string& dir, const std::string& key) {
  std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

void cache_store(const std::string& dir, const std::string& key, const std::string& value) {
  std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  std::filesystem::path tmp = base / ("." + key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache_store: cannot open " + tmp.string());
    out << value;
  }
  std::filesystem::rename(tmp, base / (key + ".json"));
}

} // namespace x0eis
