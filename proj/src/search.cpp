// Exhaustive codeword enumeration.
//
// Messages are enumerated per projective class: the first nonzero message
// coordinate t is fixed to 1, coordinates after t run over all of F_q.  Each
// work unit fixes t and a few prefix coordinates and walks the remaining ones
// in modular q-ary Gray order, so consecutive codewords differ by one scaled
// basis row.  Field elements of a coordinate are visited along a cycle whose
// consecutive entries differ by a single x^j (rep p^j), which keeps the table
// of scaled rows at k * e entries.

#include <algorithm>
#include <atomic>
#include <thread>

#include "ogc/code.hpp"
#include "ogc/error.hpp"

namespace ogc::code::detail {

namespace {

enum class AddKind { xor_bytes, add_mod_p, table };

struct UnitResult {
  std::size_t best = SIZE_MAX;
  std::vector<std::uint8_t> message;
};

struct Engine {
  const gf::Field& field;
  const kernels::KernelSet& kern;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t npad = 0;
  std::uint32_t q = 0;
  AddKind kind = AddKind::table;
  std::vector<std::uint8_t> add_table;
  // basis[j] as bytes, padded.
  std::vector<std::vector<std::uint8_t>> basis;
  // unit_rows[j * e + i] = x^i * basis[j].
  std::vector<std::vector<std::uint8_t>> unit_rows;
  // Element cycle and, per step cycle[g] -> cycle[g+1 mod q], the digit moved.
  std::vector<std::uint8_t> cycle;
  std::vector<std::uint32_t> step_digit;

  Engine(const gf::Field& f, const kernels::KernelSet& ks) : field(f), kern(ks) {}

  std::size_t accumulate(std::uint8_t* acc, const std::uint8_t* row) const {
    switch (kind) {
      case AddKind::xor_bytes:
        return kern.xor_accumulate(acc, row, npad);
      case AddKind::add_mod_p:
        return kern.addmod_accumulate(acc, row, npad, static_cast<std::uint8_t>(q));
      default:
        return kern.table_accumulate(acc, row, npad, add_table.data(), q);
    }
  }
};

void build_cycle(Engine& eng) {
  const std::uint32_t p = eng.field.p(), e = eng.field.e(), q = eng.q;
  eng.cycle.resize(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    std::uint32_t rep = 0, scale = 1, v = i;
    for (std::uint32_t j = 0; j < e; ++j) {
      const std::uint32_t d = v % p, next = (v / p) % p;
      rep += ((d + p - (j + 1 < e ? next : 0)) % p) * scale;
      v /= p;
      scale *= p;
    }
    eng.cycle[i] = static_cast<std::uint8_t>(rep);
  }
  eng.step_digit.resize(q);
  for (std::uint32_t g = 0; g < q; ++g) {
    const gf::Elem delta = eng.field.sub(gf::Elem{eng.cycle[(g + 1) % q]}, gf::Elem{eng.cycle[g]});
    std::uint32_t unit = 1, j = 0;
    while (j < e && unit != delta.rep) {
      unit *= p;
      ++j;
    }
    if (j == e) throw Error("internal: element cycle step is not a unit digit");
    eng.step_digit[g] = j;
  }
}

void run_unit(const Engine& eng, std::size_t t, std::uint64_t prefix, std::size_t prefix_len, UnitResult& result,
              std::vector<std::uint64_t>* hist) {
  const auto& F = eng.field;
  const std::size_t k = eng.k, q = eng.q, e = F.e();
  std::vector<std::uint8_t> msg(k, 0);
  msg[t] = 1;
  for (std::size_t i = prefix_len; i-- > 0;) {
    msg[t + 1 + i] = static_cast<std::uint8_t>(prefix % q);
    prefix /= q;
  }

  std::vector<gf::Elem> start(eng.npad, gf::Elem{0});
  for (std::size_t j = 0; j < k; ++j) {
    if (msg[j] == 0) continue;
    for (std::size_t c = 0; c < eng.n; ++c)
      start[c] = F.add(start[c], F.mul(gf::Elem{msg[j]}, gf::Elem{eng.basis[j][c]}));
  }
  std::vector<std::uint8_t> acc(eng.npad, 0);
  for (std::size_t c = 0; c < eng.n; ++c) acc[c] = static_cast<std::uint8_t>(start[c].rep);

  auto record = [&](std::size_t w) {
    if (hist) ++(*hist)[w];
    if (w < result.best) {
      result.best = w;
      result.message = msg;
    } else if (w == result.best && msg < result.message) {
      result.message = msg;
    }
  };
  record(eng.kern.count_nonzero(acc.data(), eng.npad));

  const std::size_t inner = k - 1 - t - prefix_len;
  if (inner == 0) return;
  // plain: base-q counter over the inner positions (digit d is message
  // position k-1-d).  Step i of the modular Gray code moves digit nu_q(i) by
  // one step along the element cycle; gray[d] is that cycle index.
  std::vector<std::uint32_t> plain(inner, 0);
  std::vector<std::uint32_t> gray(inner, 0);
  while (true) {
    std::size_t d = 0;
    while (d < inner && plain[d] == q - 1) {
      plain[d] = 0;
      ++d;
    }
    if (d == inner) break;
    ++plain[d];
    const std::uint32_t g = gray[d];
    const std::size_t pos = k - 1 - d;
    const std::uint32_t unit = eng.step_digit[g];
    gray[d] = (g + 1) % static_cast<std::uint32_t>(q);
    msg[pos] = eng.cycle[gray[d]];
    record(eng.accumulate(acc.data(), eng.unit_rows[pos * e + unit].data()));
  }
}

}  // namespace

SearchOutcome search(const gf::Field& field, const std::vector<std::vector<gf::Elem>>& basis_rows,
                     const SearchOptions& options, bool want_histogram) {
  const kernels::KernelSet& kern = options.kernels ? *options.kernels : kernels::best();
  Engine eng(field, kern);
  eng.k = basis_rows.size();
  eng.q = field.q();
  if (eng.q > 256) throw InvalidField("codeword enumeration supports q <= 256");
  eng.n = eng.k ? basis_rows[0].size() : 0;
  eng.npad = kernels::padded_length(eng.n);

  SearchOutcome out;
  if (want_histogram) out.histogram.assign(eng.n + 1, 0);
  if (eng.k == 0) return out;

  if (field.p() == 2) {
    eng.kind = AddKind::xor_bytes;
  } else if (field.e() == 1) {
    eng.kind = AddKind::add_mod_p;
  } else {
    eng.kind = AddKind::table;
    eng.add_table.resize(static_cast<std::size_t>(eng.q) * eng.q);
    for (std::uint32_t a = 0; a < eng.q; ++a)
      for (std::uint32_t b = 0; b < eng.q; ++b)
        eng.add_table[a * eng.q + b] = static_cast<std::uint8_t>(field.add(gf::Elem{a}, gf::Elem{b}).rep);
  }

  const std::size_t e = field.e();
  eng.basis.assign(eng.k, std::vector<std::uint8_t>(eng.npad, 0));
  eng.unit_rows.assign(eng.k * e, std::vector<std::uint8_t>(eng.npad, 0));
  for (std::size_t j = 0; j < eng.k; ++j) {
    if (basis_rows[j].size() != eng.n) throw DimensionMismatch("basis rows differ in length");
    std::uint32_t unit = 1;
    for (std::size_t i = 0; i < e; ++i, unit *= field.p()) {
      for (std::size_t c = 0; c < eng.n; ++c) {
        eng.basis[j][c] = static_cast<std::uint8_t>(basis_rows[j][c].rep);
        eng.unit_rows[j * e + i][c] = static_cast<std::uint8_t>(field.mul(gf::Elem{unit}, basis_rows[j][c]).rep);
      }
    }
  }
  build_cycle(eng);

  const unsigned threads = std::max(1u, options.threads);
  struct Unit {
    std::size_t t;
    std::uint64_t prefix;
    std::size_t prefix_len;
  };
  std::vector<Unit> units;
  for (std::size_t t = 0; t < eng.k; ++t) {
    const std::size_t free = eng.k - 1 - t;
    std::size_t s = 0;
    std::uint64_t count = 1;
    while (threads > 1 && s < free && count < 16ull * threads) {
      count *= eng.q;
      ++s;
    }
    for (std::uint64_t pfx = 0; pfx < count; ++pfx) units.push_back({t, pfx, s});
  }

  std::vector<UnitResult> results(units.size());
  std::vector<std::vector<std::uint64_t>> hists(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    std::vector<std::uint64_t>* hist = nullptr;
    if (want_histogram) {
      hists[id].assign(eng.n + 1, 0);
      hist = &hists[id];
    }
    for (std::size_t u = next++; u < units.size(); u = next++)
      run_unit(eng, units[u].t, units[u].prefix, units[u].prefix_len, results[u], hist);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }

  std::size_t best = SIZE_MAX;
  const std::vector<std::uint8_t>* best_msg = nullptr;
  for (const auto& r : results) {
    if (r.best < best || (r.best == best && best_msg && r.message < *best_msg)) {
      best = r.best;
      best_msg = &r.message;
    }
  }
  out.min_weight = best;
  for (auto v : *best_msg) out.message.push_back(gf::Elem{v});
  if (want_histogram)
    for (const auto& h : hists)
      for (std::size_t w = 0; w < h.size(); ++w) out.histogram[w] += h[w];
  return out;
}

}  // namespace ogc::code::detail
