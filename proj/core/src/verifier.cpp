#include "powerfree/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace powerfree {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "fail";
}

CheckStatus parse_check_status(std::string_view text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "vacuous") return CheckStatus::vacuous;
  throw std::invalid_argument("unknown check status '" + std::string(text) + "'");
}

namespace {

const Rational kSevenQuarters(7, 4);

Witness witness_from(const TernaryWord& w, const RepetitionOccurrence& occ) {
  return Witness{occ.start, occ.total_length, occ.period,
                 w.factor(occ.start, occ.total_length).to_string()};
}

Witness witness_span(const TernaryWord& w, std::size_t start, std::size_t length) {
  return Witness{start, length, std::nullopt, w.factor(start, length).to_string()};
}

CheckReport failed(CheckReport report, Witness witness, std::string detail = {}) {
  report.status = CheckStatus::fail;
  report.witness = std::move(witness);
  if (!detail.empty()) report.detail = std::move(detail);
  return report;
}

// Runs body(), stamping name, level and elapsed time onto its report.
template <typename Body>
CheckReport timed(std::string name, std::optional<unsigned> level, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport report = body();
  const auto t1 = std::chrono::steady_clock::now();
  report.check_name = std::move(name);
  report.level = level;
  report.millis =
      static_cast<double>(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()) /
      1000.0;
  return report;
}

void require_permutation_triples(const TernaryWord& w) {
  if (w.size() % 3 != 0)
    throw PreconditionError("word length " + std::to_string(w.size()) + " is not divisible by 3");
  for (std::size_t k = 0; k < w.size(); k += 3)
    if (!is_permutation_triple(w, k))
      throw PreconditionError("triple at position " + std::to_string(k) +
                              " is not a permutation of 123");
}

Symbol third_letter(Symbol a, Symbol b) { return Symbol(6 - a.value() - b.value()); }

bool is_squarefree_span(const TernaryWord& w, std::size_t start, std::size_t length) {
  for (std::size_t half = 1; 2 * half <= length; ++half)
    for (std::size_t i = start; i + 2 * half <= start + length; ++i) {
      bool square = true;
      for (std::size_t k = 0; k < half && square; ++k) square = w[i + k] == w[i + half + k];
      if (square) return false;
    }
  return true;
}

// Given x2 x3 x4 x5 from two adjacent permutation triples x0x1x2 | x3x4x5 in
// a squarefree stretch, x0 x1 is forced: x2 equals x4 or x5 (x2 = x3 is a
// square), and the other choice for x1 would create a square of length 4 or 6.
std::pair<Symbol, Symbol> forced_prefix(Symbol x2, Symbol x3, Symbol x4, Symbol x5) {
  if (x2 == x4) return {x3, x5};
  if (x2 == x5) return {x4, x3};
  throw PreconditionError("no forced completion: neighbourhood contains a square");
}

}  // namespace

CheckReport check_squarefree(const TernaryWord& w) {
  CheckReport report;
  const auto verdict = check_freeness(w, Rational(2), Mode::strict);
  if (!verdict.free) return failed(std::move(report), witness_from(w, *verdict.witness), "square found");
  report.detail = "length=" + std::to_string(w.size());
  return report;
}

CheckReport check_triples(const TernaryWord& w) {
  CheckReport report;
  const auto blocks = triples(w);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (!is_permutation_triple(w, 3 * k))
      return failed(std::move(report), witness_span(w, 3 * k, 3),
                    "block " + std::to_string(k) + " is not a permutation of 123");
  report.detail = "blocks=" + std::to_string(blocks.size());
  return report;
}

CheckReport check_preimage(const TernaryWord& w, const TernaryWord& expected) {
  CheckReport report;
  const TernaryWord middles = extract_middles(w);
  if (middles.size() != expected.size())
    return failed(std::move(report), witness_span(w, 0, 0), "length mismatch");
  for (std::size_t k = 0; k < middles.size(); ++k)
    if (middles[k] != expected[k])
      return failed(std::move(report), witness_span(w, 3 * k + 1, 1),
                    "middle " + std::to_string(k) + " expected " + std::string(1, expected[k].to_char()));
  report.detail = "length=" + std::to_string(middles.size());
  return report;
}

CheckReport check_four_tuple(const TernaryWord& w) {
  if (w.size() % 3 != 0)
    throw std::invalid_argument("word length " + std::to_string(w.size()) + " is not divisible by 3");
  CheckReport report;
  const std::size_t blocks = w.size() / 3;
  for (std::size_t q = 0; q + 4 <= blocks; ++q) {
    const std::size_t p = 3 * q;
    if (w[p] == w[p + 3] && w[p] == w[p + 6] && w[p] == w[p + 9])
      return failed(std::move(report), witness_span(w, p, 12),
                    "four equal leaders at q=" + std::to_string(q));
  }
  report.detail = "windows=" + std::to_string(blocks >= 4 ? blocks - 3 : 0);
  return report;
}

CheckReport check_main(const TernaryWord& w, bool cross_check) {
  CheckReport report;
  const auto verdict = check_freeness(w, kSevenQuarters, Mode::plus, Engine::optimized);
  if (cross_check) {
    const auto oracle = check_freeness(w, kSevenQuarters, Mode::plus, Engine::oracle);
    if (!(oracle == verdict)) {
      const auto& occ = verdict.witness ? verdict.witness : oracle.witness;
      return failed(std::move(report), occ ? witness_from(w, *occ) : witness_span(w, 0, 0),
                    "oracle and optimized engines disagree");
    }
  }
  if (!verdict.free)
    return failed(std::move(report), witness_from(w, *verdict.witness),
                  "exponent " + verdict.witness->exponent().to_string() + " > 7/4");
  report.detail = "length=" + std::to_string(w.size()) + (cross_check ? " engines=both" : " engines=optimized");
  return report;
}

CheckReport check_base_case(unsigned n) {
  static const std::array<std::string_view, 4> kExpected{
      "2", "123", "213123132", "123213231213123132312132123"};
  if (n < 1 || n > 3) throw std::invalid_argument("base cases are n = 1, 2, 3");
  return timed("base_case", n, [n] {
    CheckReport report;
    const TernaryWord w = generate(n);
    if (w.to_string() != kExpected[n])
      return failed(std::move(report), witness_span(w, 0, w.size()),
                    "expected " + std::string(kExpected[n]));
    const auto verdict = check_freeness(w, kSevenQuarters, Mode::plus, Engine::oracle);
    if (!verdict.free) return failed(std::move(report), witness_from(w, *verdict.witness), "7/4^+ power");
    report.detail = w.to_spaced_string();
    return report;
  });
}

CheckReport check_squarefree(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("squarefree", n, [&] { return check_squarefree(w); });
}

CheckReport check_triples(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("triples", n, [&] { return check_triples(w); });
}

CheckReport check_preimage(unsigned n, unsigned cap) {
  if (n < 1) throw std::invalid_argument("preimage check needs n >= 1");
  const TernaryWord w = generate(n, cap);
  const TernaryWord prev = generate(n - 1, cap);
  return timed("preimage", n, [&] { return check_preimage(w, prev); });
}

CheckReport check_four_tuple(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("four_tuple", n, [&] { return check_four_tuple(w); });
}

CheckReport check_main(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("main", n, [&] { return check_main(w, n <= 5); });
}

std::size_t straddling_window_count(std::size_t max_length) {
  std::size_t total = 0;
  for (std::size_t len = 2; len <= max_length; ++len) total += len - 1;
  return total;
}

CheckReport check_junction(const TernaryWord& left, const TernaryWord& right, std::size_t max_length) {
  CheckReport report;
  const TernaryWord joined = left + right;
  const std::size_t boundary = left.size();
  std::size_t windows = 0;
  for (std::size_t len = 2; len <= max_length; ++len) {
    for (std::size_t back = 1; back < len; ++back) {
      // Window keeps `back` symbols of the left part and len - back of the right.
      if (back > boundary || len - back > right.size()) continue;
      const std::size_t start = boundary - back;
      ++windows;
      const TernaryWord window = joined.factor(start, len);
      const auto verdict = check_freeness(window, kSevenQuarters, Mode::plus);
      if (!verdict.free) {
        RepetitionOccurrence occ = *verdict.witness;
        occ.start += start;
        return failed(std::move(report), witness_from(joined, occ), "7/4^+ power across the junction");
      }
    }
  }
  report.detail = "windows=" + std::to_string(windows);
  return report;
}

CheckReport check_boundary_windows(unsigned n, unsigned cap) {
  if (n < 3) throw std::invalid_argument("boundary windows are checked for n >= 3");
  const TernaryWord w = generate(n, cap);
  return timed("boundary_windows", n, [&] {
    CheckReport left = check_junction(apply_permutation(SIGMA, w), w);
    if (!left.passed()) {
      left.detail = "sigma|phi: " + left.detail;
      return left;
    }
    CheckReport right = check_junction(w, apply_permutation(RHO, w));
    if (!right.passed()) {
      right.detail = "phi|rho: " + right.detail;
      return right;
    }
    CheckReport report;
    report.detail = "sigma|phi " + left.detail + ", phi|rho " + right.detail;
    return report;
  });
}

RepetitionOccurrence extend_occurrence(const TernaryWord& w, const RepetitionOccurrence& occ) {
  require_permutation_triples(w);
  const std::size_t s = occ.period;
  if (s == 0 || s % 3 != 0) throw PreconditionError("period must be a positive multiple of 3");
  if (!holds_in(w, occ)) throw PreconditionError("occurrence does not hold in the word");

  RepetitionOccurrence out = occ;

  switch (out.start % 3) {
    case 0:
      break;
    case 1: {
      // a[3q] completes the triple whose tail a[3q+1] a[3q+2] is matched.
      if (out.matched_length() < 2) throw PreconditionError("matched length below 2 at the left end");
      const std::size_t p = out.start;
      const Symbol here = third_letter(w[p], w[p + 1]);
      const Symbol there = third_letter(w[p + s], w[p + s + 1]);
      if (here != there) throw std::logic_error("triple completion disagrees across the period");
      out.start -= 1;
      out.total_length += 1;
      break;
    }
    case 2: {
      if (out.matched_length() < 4) throw PreconditionError("matched length below 4 at the left end");
      const std::size_t base = out.start - 2;
      if (base + s + 6 > w.size()) throw PreconditionError("extension would leave the word");
      if (!is_squarefree_span(w, base, 6) || !is_squarefree_span(w, base + s, 6))
        throw PreconditionError("square in the neighbourhood of the left end");
      const auto here = forced_prefix(w[base + 2], w[base + 3], w[base + 4], w[base + 5]);
      const auto there = forced_prefix(w[base + s + 2], w[base + s + 3], w[base + s + 4], w[base + s + 5]);
      if (here != there) throw std::logic_error("forced prefix disagrees across the period");
      out.start -= 2;
      out.total_length += 2;
      break;
    }
  }

  const std::size_t last = out.end() - 1;
  switch (last % 3) {
    case 2:
      break;
    case 1: {
      if (out.matched_length() < 2) throw PreconditionError("matched length below 2 at the right end");
      if (last + 1 >= w.size()) throw PreconditionError("extension would leave the word");
      const Symbol here = third_letter(w[last - 1], w[last]);
      const Symbol there = third_letter(w[last - 1 - s], w[last - s]);
      if (here != there) throw std::logic_error("triple completion disagrees across the period");
      out.total_length += 1;
      break;
    }
    case 0: {
      if (out.matched_length() < 4) throw PreconditionError("matched length below 4 at the right end");
      if (last + 2 >= w.size()) throw PreconditionError("extension would leave the word");
      const std::size_t base = last - 3;
      if (!is_squarefree_span(w, base, 6) || !is_squarefree_span(w, base - s, 6))
        throw PreconditionError("square in the neighbourhood of the right end");
      // Mirror image of the left-end rule, read right to left.
      const auto here = forced_prefix(w[last], w[last - 1], w[last - 2], w[last - 3]);
      const auto there = forced_prefix(w[last - s], w[last - 1 - s], w[last - 2 - s], w[last - 3 - s]);
      if (here != there) throw std::logic_error("forced suffix disagrees across the period");
      out.total_length += 2;
      break;
    }
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

namespace {

struct OffsetRun {
  std::size_t first = 0;
  std::size_t length = 0;
};

struct Propagation {
  std::size_t lo = 0;
  std::array<OffsetRun, 3> runs{};
};

Propagation propagate(const TernaryWord& w, const RepetitionOccurrence& occ) {
  require_permutation_triples(w);
  const std::size_t s = occ.period;
  if (s == 0 || s % 3 == 0) throw PreconditionError("period must not be a multiple of 3");
  if (!holds_in(w, occ)) throw PreconditionError("occurrence does not hold in the word");
  if (occ.matched_length() < kPropagationMatch)
    throw PreconditionError("matched length " + std::to_string(occ.matched_length()) +
                            " is below " + std::to_string(kPropagationMatch));

  Propagation result;
  const std::size_t lo = occ.start / 3 * 3;
  const std::size_t hi = std::min(w.size(), (occ.end() + 2) / 3 * 3);
  const std::size_t triple_count = (hi - lo) / 3;
  result.lo = lo;
  DisjointSets classes(hi - lo);

  for (std::size_t i = occ.start; i < occ.start + occ.matched_length(); ++i)
    classes.unite(i - lo, i + s - lo);

  // Triple completion to a fixed point.
  constexpr std::array<std::array<std::size_t, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < triple_count; ++a) {
      for (std::size_t b = 0; b < triple_count; ++b) {
        if (a == b) continue;
        for (const auto& pa : kPairs) {
          for (const auto& pb : kPairs) {
            for (int flip = 0; flip < 2; ++flip) {
              const std::size_t b0 = flip ? pb[1] : pb[0];
              const std::size_t b1 = flip ? pb[0] : pb[1];
              if (classes.find(3 * a + pa[0]) == classes.find(3 * b + b0) &&
                  classes.find(3 * a + pa[1]) == classes.find(3 * b + b1))
                changed |= classes.unite(3 * a + pa[2], 3 * b + pb[2]);
            }
          }
        }
      }
    }
  }

  for (std::size_t offset = 0; offset < 3; ++offset) {
    OffsetRun& best = result.runs[offset];
    std::size_t run_first = 0, run_len = 0;
    for (std::size_t t = 0; t < triple_count; ++t) {
      if (run_len > 0 && classes.find(3 * t + offset) == classes.find(3 * (t - 1) + offset)) {
        ++run_len;
      } else {
        run_first = t;
        run_len = 1;
      }
      if (run_len > best.length) best = {run_first, run_len};
    }
  }
  return result;
}

}  // namespace

std::array<std::size_t, 3> forced_offset_runs(const TernaryWord& w, const RepetitionOccurrence& occ) {
  const Propagation p = propagate(w, occ);
  return {p.runs[0].length, p.runs[1].length, p.runs[2].length};
}

CheckReport leader_propagation(const TernaryWord& w, const RepetitionOccurrence& occ) {
  const Propagation p = propagate(w, occ);
  CheckReport report;
  report.check_name = "leader_propagation";

  const OffsetRun& best = p.runs[0];
  for (std::size_t k = 0; k < best.length; ++k) report.chain.push_back(p.lo + 3 * (best.first + k));
  for (std::size_t pos : report.chain)
    if (w[pos] != w[report.chain.front()])
      throw std::logic_error("deduced equalities contradict the word");

  report.detail = "leaders=" + std::to_string(p.runs[0].length) + " middles=" + std::to_string(p.runs[1].length) +
                  " trailers=" + std::to_string(p.runs[2].length);
  if (best.length < 4) {
    report.status = CheckStatus::fail;
    report.witness = witness_from(w, occ);
  }
  return report;
}

CheckReport check_triple_alignment(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("triple_alignment", n, [&] {
    CheckReport report;
    std::size_t examined = 0, skipped = 0, moved = 0;
    for (std::size_t p = 3; p < w.size(); p += 3) {
      for (const auto& run : maximal_repetitions(w, p)) {
        RepetitionOccurrence out;
        try {
          out = extend_occurrence(w, run);
        } catch (const PreconditionError&) {
          ++skipped;
          continue;
        }
        ++examined;
        const bool ok = out.period == run.period && out.start % 3 == 0 && (out.end() - 1) % 3 == 2 &&
                        out.start <= run.start && run.start - out.start <= 2 &&
                        out.end() >= run.end() && out.end() - run.end() <= 2 && holds_in(w, out);
        if (!ok) return failed(std::move(report), witness_from(w, run), "extension breaks its postcondition");
        if (!(out == run)) ++moved;
      }
    }
    report.detail = "examined=" + std::to_string(examined) + " skipped=" + std::to_string(skipped) +
                    " moved=" + std::to_string(moved);
    if (examined == 0) report.status = CheckStatus::vacuous;
    return report;
  });
}

CheckReport check_leader_propagation(unsigned n, unsigned cap) {
  const TernaryWord w = generate(n, cap);
  return timed("leader_propagation", n, [&] {
    CheckReport report;
    for (std::size_t p = 1; p < w.size(); ++p) {
      if (p % 3 == 0) continue;
      for (const auto& run : maximal_repetitions(w, p)) {
        if (run.matched_length() < kPropagationMatch) continue;
        CheckReport chain = leader_propagation(w, run);
        return failed(std::move(report), witness_from(w, run),
                      "repetition with matched length " + std::to_string(run.matched_length()) +
                          " and period " + std::to_string(p) + "; " + chain.detail);
      }
    }
    report.status = CheckStatus::vacuous;
    report.detail = "no repetition with period not divisible by 3 and matched length >= " +
                    std::to_string(kPropagationMatch);
    return report;
  });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "base_case", "squarefree", "triples",          "preimage",          "four_tuple",
      "boundary_windows", "main", "triple_alignment", "leader_propagation"};
  return names;
}

std::vector<CheckReport> run_all(unsigned n_max, const std::vector<std::string>& only, unsigned cap) {
  if (n_max == 0) throw std::invalid_argument("level-max must be at least 1");
  if (n_max > cap)
    throw ResourceLimitError("level " + std::to_string(n_max) + " exceeds generation cap " +
                             std::to_string(cap));
  for (const auto& name : only)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw std::invalid_argument("unknown check '" + name + "'");
  const auto selected = [&](const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };

  std::vector<CheckReport> reports;
  for (const auto& name : check_names()) {
    if (!selected(name)) continue;
    if (name == "base_case") {
      for (unsigned n = 1; n <= std::min(3u, n_max); ++n) reports.push_back(check_base_case(n));
    } else if (name == "boundary_windows") {
      for (unsigned n = 3; n < n_max; ++n) reports.push_back(check_boundary_windows(n, cap));
    } else {
      for (unsigned n = 1; n <= n_max; ++n) {
        if (name == "squarefree") reports.push_back(check_squarefree(n, cap));
        else if (name == "triples") reports.push_back(check_triples(n, cap));
        else if (name == "preimage") reports.push_back(check_preimage(n, cap));
        else if (name == "four_tuple") reports.push_back(check_four_tuple(n, cap));
        else if (name == "main") reports.push_back(check_main(n, cap));
        else if (name == "triple_alignment") reports.push_back(check_triple_alignment(n, cap));
        else if (name == "leader_propagation") reports.push_back(check_leader_propagation(n, cap));
      }
    }
  }
  return reports;
}

namespace {

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string status_label(CheckStatus status) {
  std::string label(to_string(status));
  std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::toupper(c); });
  return label;
}

}  // namespace

std::string render_table(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << pad("check", 20) << pad("n", 4) << pad("status", 9) << "detail\n";
  std::size_t passed = 0, vacuous = 0, failed_count = 0;
  for (const auto& r : reports) {
    std::string n = r.level ? std::to_string(*r.level) : "-";
    out << pad(r.check_name, 20) << pad(n, 4) << pad(status_label(r.status), 9) << r.detail;
    if (r.witness) {
      out << " [witness start=" << r.witness->start << " length=" << r.witness->length;
      if (r.witness->period) out << " period=" << *r.witness->period;
      out << " factor=" << r.witness->factor << "]";
    }
    out << '\n';
    switch (r.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::vacuous: ++vacuous; break;
      case CheckStatus::fail: ++failed_count; break;
    }
  }
  out << reports.size() << " checks: " << passed << " passed, " << vacuous << " vacuous, "
      << failed_count << " failed\n";
  return out.str();
}

std::string render_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json obj;
    obj["name"] = r.check_name;
    obj["n"] = r.level ? nlohmann::json(*r.level) : nlohmann::json(nullptr);
    obj["status"] = std::string(to_string(r.status));
    obj["passed"] = r.passed();
    if (r.witness) {
      nlohmann::json wit;
      wit["start"] = r.witness->start;
      wit["length"] = r.witness->length;
      wit["period"] = r.witness->period ? nlohmann::json(*r.witness->period) : nlohmann::json(nullptr);
      wit["factor"] = r.witness->factor;
      obj["witness"] = std::move(wit);
    } else {
      obj["witness"] = nullptr;
    }
    obj["detail"] = r.detail;
    obj["chain"] = r.chain;
    obj["millis"] = r.millis;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<CheckReport> reports;
  for (const auto& obj : arr) {
    CheckReport r;
    r.check_name = obj.at("name").get<std::string>();
    if (!obj.at("n").is_null()) r.level = obj.at("n").get<unsigned>();
    r.status = parse_check_status(obj.at("status").get<std::string>());
    if (!obj.at("witness").is_null()) {
      const auto& wit = obj.at("witness");
      Witness w;
      w.start = wit.at("start").get<std::size_t>();
      w.length = wit.at("length").get<std::size_t>();
      if (!wit.at("period").is_null()) w.period = wit.at("period").get<std::size_t>();
      w.factor = wit.at("factor").get<std::string>();
      r.witness = std::move(w);
    }
    r.detail = obj.at("detail").get<std::string>();
    r.chain = obj.at("chain").get<std::vector<std::size_t>>();
    r.millis = obj.at("millis").get<double>();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace powerfree
