#include "rbmtopo/phase_poly.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <optional>
#include <sstream>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/gadgets.hpp"
#include "rbmtopo/gf2.hpp"

namespace rbmtopo {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

template <typename Key>
void accumulate(std::map<Key, int>& terms, const Key& key, int c, int modulus) {
  const int v = mod(terms[key] + c, modulus);
  if (v == 0) {
    terms.erase(key);
  } else {
    terms[key] = v;
  }
}

}  // namespace

Complex alpha_power(int k) {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  static const Complex table[8] = {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}};
  return table[mod(k, 8)];
}

void PhasePolynomial::check_index(int i) const {
  if (i < 0 || i >= n_) {
    throw ContractError("phase polynomial index " + std::to_string(i) + " outside [0, " +
                        std::to_string(n_) + ")");
  }
}

void PhasePolynomial::add_constant(int c) { constant_ = mod(constant_ + c, 8); }

void PhasePolynomial::add_linear(int i, int c) {
  check_index(i);
  accumulate(linear_, i, c, 8);
}

void PhasePolynomial::add_quadratic(int i, int j, int c) {
  check_index(i);
  check_index(j);
  if (i == j) {
    add_linear(i, 2 * c);
    return;
  }
  accumulate(quadratic_, Pair{std::min(i, j), std::max(i, j)}, c, 4);
}

void PhasePolynomial::add_cubic(int i, int j, int k, int c) {
  check_index(i);
  check_index(j);
  check_index(k);
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  // v_a^2 v_b = v_a v_b, and (-1)^{c v_a v_b} = i^{2c v_a v_b}.
  if (t[0] == t[2]) {
    add_linear(t[0], 4 * c);
    return;
  }
  if (t[0] == t[1] || t[1] == t[2]) {
    add_quadratic(t[0], t[2], 2 * c);
    return;
  }
  accumulate(cubic_, t, c, 2);
}

int PhasePolynomial::eighths(BitView v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw ContractError("configuration length mismatch");
  int total = constant_;
  for (const auto& [i, c] : linear_) total += v[i] ? c : 0;
  for (const auto& [p, c] : quadratic_) total += (v[p.first] && v[p.second]) ? 2 * c : 0;
  for (const auto& [t, c] : cubic_) total += (v[t[0]] && v[t[1]] && v[t[2]]) ? 4 * c : 0;
  return mod(total, 8);
}

Complex PhasePolynomial::value(BitView v) const { return alpha_power(eighths(v)); }

bool PhasePolynomial::is_zero() const {
  return constant_ == 0 && linear_.empty() && quadratic_.empty() && cubic_.empty();
}

bool AffineParity::satisfied(BitView v) const {
  int s = constant;
  for (int i : support) s += v[static_cast<std::size_t>(i)];
  return (s & 1) == 0;
}

AffineParity make_parity(std::vector<int> support, int constant) {
  std::sort(support.begin(), support.end());
  std::vector<int> reduced;
  for (int i : support) {
    if (!reduced.empty() && reduced.back() == i) {
      reduced.pop_back();
    } else {
      reduced.push_back(i);
    }
  }
  return AffineParity{std::move(reduced), mod(constant, 2)};
}

Complex eval_closed_form(const ClosedFormState& state, BitView v) {
  if (v.size() != static_cast<std::size_t>(state.n)) throw ContractError("configuration length mismatch");
  for (const auto& p : state.parities) {
    if (!p.satisfied(v)) return {0.0, 0.0};
  }
  return state.phase.value(v);
}

DenseState dense_closed_form(const ClosedFormState& state, int cap) {
  check_dense_cap(state.n, cap);
  DenseState out = DenseState::zeros(state.n);
  BitString v(static_cast<std::size_t>(state.n));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    bits_from_index(idx, v);
    out.amplitudes[idx] = eval_closed_form(state, v);
  }
  return out;
}

RbmNetwork compile_to_rbm(const ClosedFormState& state) {
  constexpr double pi = std::numbers::pi;
  constexpr Complex i_unit{0.0, 1.0};
  NetworkBuilder builder(state.n);
  for (const auto& p : state.parities) {
    for (int i : p.support) {
      if (i < 0 || i >= state.n) throw ContractError("parity support index out of range");
    }
    if (p.support.empty()) {
      // Always violated: a bias-only unit with 1 + e^{i pi} = 0.
      if (p.constant) builder.add_hidden(HiddenUnit{i_unit * pi, {}});
      continue;
    }
    parity_gadget(p.support, p.constant).add_to(builder);
  }
  const auto& phase = state.phase;
  builder.add_log_scale(i_unit * pi * static_cast<double>(phase.constant()) / 4.0);
  for (const auto& [i, c] : phase.linear()) builder.add_visible_bias(i, i_unit * pi * static_cast<double>(c) / 4.0);
  for (const auto& [p, c] : phase.quadratic()) {
    two_body_phase(p.first, p.second, pi * static_cast<double>(c) / 2.0).add_to(builder);
  }
  for (const auto& [t, c] : phase.cubic()) {
    hyperedge_phase({t[0], t[1], t[2]}, pi).add_to(builder);
  }
  return builder.build();
}

PhasePolynomial fit_cubic_phase(std::span<const BitString> support, std::span<const int> signs, int n) {
  if (support.size() != signs.size()) throw ContractError("support and sign lists differ in length");
  if (n < 0) throw ContractError("negative qubit count");
  for (const auto& v : support) {
    if (v.size() != static_cast<std::size_t>(n)) throw ContractError("support element has wrong length");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw ContractError("signs must be +1 or -1");
  }

  // Monomials of degree <= 3 in a fixed order: constant, v_i, v_i v_j, v_i v_j v_k.
  std::vector<std::vector<int>> monomials{{}};
  for (int i = 0; i < n; ++i) monomials.push_back({i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) monomials.push_back({i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) monomials.push_back({i, j, k});

  const int rows = static_cast<int>(support.size());
  const int cols = static_cast<int>(monomials.size());
  gf2::BitMatrix a(rows, cols);
  gf2::BitVector rhs(rows);
  for (int r = 0; r < rows; ++r) {
    const auto& v = support[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols; ++c) {
      bool on = true;
      for (int i : monomials[static_cast<std::size_t>(c)]) on = on && v[static_cast<std::size_t>(i)];
      if (on) a.set(r, c);
    }
    if (signs[static_cast<std::size_t>(r)] == -1) rhs.set(r);
  }

  const gf2::Solution sol = gf2::solve(a, rhs);
  if (!sol.x) {
    std::ostringstream msg;
    msg << "cubic phase fit infeasible: rank " << sol.rank << " of the " << rows << "x" << cols
        << " monomial system, rank " << sol.augmented_rank << " with signs appended";
    throw FitError(msg.str());
  }

  PhasePolynomial out(n);
  for (int c : sol.x->ones()) {
    const auto& m = monomials[static_cast<std::size_t>(c)];
    switch (m.size()) {
      case 0: out.add_constant(4); break;
      case 1: out.add_linear(m[0], 4); break;
      case 2: out.add_quadratic(m[0], m[1], 2); break;
      default: out.add_cubic(m[0], m[1], m[2], 1); break;
    }
  }
  return out;
}

ClosedFormState parse_closed_form(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<ClosedFormState> state;
  auto ints = [&](std::istringstream& ss, std::size_t count) {
    std::vector<int> out;
    int x = 0;
    while (ss >> x) out.push_back(x);
    if (!ss.eof()) throw ParseError("expected integers", line_no);
    if (count && out.size() != count) {
      throw ParseError("expected " + std::to_string(count) + " integers", line_no);
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.rfind("n=", 0) == 0) {
      if (state) throw ParseError("duplicate n= header", line_no);
      try {
        std::size_t used = 0;
        const int n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2 || n < 0) throw ParseError("invalid qubit count", line_no);
        state.emplace(n);
      } catch (const std::logic_error&) {
        throw ParseError("invalid qubit count", line_no);
      }
      continue;
    }
    if (!state) throw ParseError("missing n= header before terms", line_no);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<kind>: ...'", line_no);
    const std::string kind = line.substr(0, colon);
    std::istringstream rest(line.substr(colon + 1));
    try {
      if (kind == "parity") {
        std::vector<std::string> tokens;
        std::string tok;
        while (rest >> tok) tokens.push_back(tok);
        int constant = 0;
        if (!tokens.empty() && tokens.back() == "+1") {
          constant = 1;
          tokens.pop_back();
        }
        std::vector<int> support;
        for (const auto& t : tokens) {
          std::size_t used = 0;
          const int i = std::stoi(t, &used);
          if (used != t.size() || i < 0 || i >= state->n) throw ParseError("bad parity index '" + t + "'", line_no);
          support.push_back(i);
        }
        state->parities.push_back(make_parity(std::move(support), constant));
      } else if (kind == "lin") {
        const auto v = ints(rest, 2);
        state->phase.add_linear(v[0], v[1]);
      } else if (kind == "quad") {
        const auto v = ints(rest, 3);
        state->phase.add_quadratic(v[0], v[1], v[2]);
      } else if (kind == "cub") {
        const auto v = ints(rest, 4);
        state->phase.add_cubic(v[0], v[1], v[2], v[3]);
      } else if (kind == "const") {
        const auto v = ints(rest, 1);
        state->phase.add_constant(v[0]);
      } else {
        throw ParseError("unknown term kind '" + kind + "'", line_no);
      }
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::logic_error&) {
      throw ParseError("malformed term", line_no);
    }
  }
  if (!state) throw ParseError("missing n= header", 0);
  return *state;
}

std::string format_closed_form(const ClosedFormState& state) {
  std::ostringstream out;
  out << "n=" << state.n << '\n';
  for (const auto& p : state.parities) {
    out << "parity:";
    for (int i : p.support) out << ' ' << i;
    if (p.constant) out << " +1";
    out << '\n';
  }
  const auto& ph = state.phase;
  if (ph.constant()) out << "const: " << ph.constant() << '\n';
  for (const auto& [i, c] : ph.linear()) out << "lin: " << i << ' ' << c << '\n';
  for (const auto& [p, c] : ph.quadratic()) out << "quad: " << p.first << ' ' << p.second << ' ' << c << '\n';
  for (const auto& [t, c] : ph.cubic()) out << "cub: " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << c << '\n';
  return out.str();
}

}  // namespace rbmtopo
