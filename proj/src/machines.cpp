// Copyright 2026 The chemqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "chemqfa/machines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chemqfa/errors.hpp"

namespace chemqfa {

Matrix qft_matrix(std::size_t n) {
  if (n < 1) throw InvalidParameter("QFT dimension must be at least 1");
  const auto dim = static_cast<Eigen::Index>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix f(dim, dim);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      // Reduce k*i mod N first so the phase argument stays in [0, 2 pi).
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * i) % n) / static_cast<double>(n);
      f(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i - 1)) =
          std::polar(scale, angle);
    }
  }
  return f;
}

namespace {

constexpr auto kNon = StateRole::kNonHalting;
constexpr auto kAcc = StateRole::kAccept;
constexpr auto kRej = StateRole::kReject;
constexpr auto kL = Direction::kLeft;
constexpr auto kS = Direction::kStay;
constexpr auto kR = Direction::kRight;

std::string indexed(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }
std::string indexed(const char* prefix, std::size_t i, std::size_t j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

std::size_t counter_depth(std::size_t n_paths, std::size_t i) { return std::max(i, n_paths - i + 1); }

void check_paths(std::size_t n_paths) {
  if (n_paths < 2) throw InvalidParameter("the number of paths N must be at least 2");
}

/// Counter states prefix_i_j for 1 <= i <= N, 0 <= j <= max(i, N - i + 1).
/// Only the j = 0 states move the head.
void add_counter_states(PartialTable& t, const char* prefix, std::size_t n_paths) {
  for (std::size_t i = 1; i <= n_paths; ++i) {
    for (std::size_t j = 0; j <= counter_depth(n_paths, i); ++j) {
      t.add_state(indexed(prefix, i, j), kNon, j == 0 ? kR : kS);
    }
  }
}

/// Path i idles `delay(i)` extra steps on `symbol` by counting down prefix_i_delay .. prefix_i_0.
template <typename Delay>
void add_counter_rows(PartialTable& t, const char* prefix, std::size_t n_paths, char symbol, Delay delay) {
  for (std::size_t i = 1; i <= n_paths; ++i) {
    const std::size_t d = delay(i);
    t.add_row(indexed(prefix, i, 0), symbol, indexed(prefix, i, d));
    for (std::size_t j = 1; j <= d; ++j) t.add_row(indexed(prefix, i, j), symbol, indexed(prefix, i, j - 1));
  }
}

void add_uniform_split(PartialTable& t, const std::string& source, char symbol, const char* prefix,
                       std::size_t n_paths) {
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(n_paths));
  for (std::size_t i = 1; i <= n_paths; ++i) t.add_row(source, symbol, indexed(prefix, i, 0), amplitude);
}

/// source_i --symbol--> sum_k F(k, i) target_k for every path i.
void add_qft_rows(PartialTable& t, const std::vector<std::string>& sources, char symbol, const char* target) {
  const std::size_t n = sources.size();
  const Matrix f = qft_matrix(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      t.add_row(sources[i - 1], symbol, indexed(target, k),
                f(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i - 1)));
    }
  }
}

}  // namespace

std::size_t counter_state_count(std::size_t n_paths) {
  std::size_t total = 0;
  for (std::size_t i = 1; i <= n_paths; ++i) total += counter_depth(n_paths, i) + 1;
  return total;
}

PartialTable m1_printed_table() {
  PartialTable t;
  t.name = "m1";
  t.input_alphabet = "ab";
  t.initial_state = "q0";
  t.add_state("q0", kNon, kR);
  t.add_state("q1", kNon, kL);
  t.add_state("q2", kNon, kR);
  t.add_state("q3", kNon, kL);
  t.add_state("q4", kNon, kR);
  t.add_state("q5", kNon, kL);
  t.add_state("q6", kNon, kR);
  t.add_state("q7", kNon, kL);
  t.add_state("q_a1", kAcc, kS);
  t.add_state("q_a2", kAcc, kS);
  t.add_state("q_r1", kRej, kS);
  t.add_state("q_r2", kRej, kS);

  t.add_row("q0", '#', "q0");
  t.add_row("q0", 'a', "q0");
  t.add_row("q0", 'b', "q1");
  t.add_row("q1", '#', "q2");
  t.add_row("q0", '$', "q7");
  t.add_row("q1", 'a', "q2");
  t.add_row("q1", 'b', "q2");
  t.add_row("q2", 'b', "q2");
  t.add_row("q7", '$', "q_r2");
  t.add_row("q7", 'a', "q7");
  t.add_row("q2", 'a', "q3");
  t.add_row("q3", 'a', "q1");
  t.add_row("q2", '$', "q5");
  t.add_row("q4", 'a', "q4");
  t.add_row("q3", 'b', "q4");
  t.add_row("q4", 'b', "q3");
  t.add_row("q5", '#', "q_r1");
  t.add_row("q5", 'a', "q6");
  t.add_row("q5", 'b', "q5");
  t.add_row("q6", 'b', "q6");
  t.add_row("q4", '$', "q_a1");
  t.add_row("q6", 'a', "q_a2");
  return t;
}

PartialTable m1_table() {
  PartialTable t = m1_printed_table();
  std::erase_if(t.rows, [](const TransitionRow& r) { return r.source == "q1" && r.symbol == 'b'; });
  return t;
}

TwoWayQfaSpec build_m1() { return complete_partial_table(m1_table()); }

PartialTable m2_table(std::size_t n_paths) {
  check_paths(n_paths);
  const std::size_t n = n_paths;
  PartialTable t;
  t.name = "m2";
  t.path_count = n;
  t.input_alphabet = "()";
  t.initial_state = "q0";
  t.add_state("q0", kNon, kR);
  t.add_state("q1", kNon, kL);
  t.add_state("q2", kNon, kR);
  t.add_state("q3", kNon, kL);
  add_counter_states(t, "q_", n);
  for (std::size_t k = 1; k <= n; ++k) t.add_state(indexed("p_", k), k == n ? kAcc : kRej, kS);
  for (std::size_t i = 1; i <= n; ++i) t.add_state(indexed("s_", i), kNon, kL);
  for (std::size_t i = 1; i <= n; ++i) t.add_state(indexed("w_", i), kNon, kR);
  for (std::size_t i = 1; i <= n; ++i) t.add_state(indexed("r_", i), kRej, kS);
  t.add_state("q_r", kRej, kS);

  t.add_row("q0", '#', "q0");
  t.add_row("q0", '(', "q0");
  t.add_row("q0", ')', "q1");
  t.add_row("q1", '#', "q_r");
  t.add_row("q1", '(', "q2");
  t.add_row("q2", ')', "q2");
  t.add_row("q2", '(', "q3");
  t.add_row("q3", ')', "q0");
  t.add_row("q2", '$', "q2");
  add_uniform_split(t, "q2", '#', "q_", n);
  add_counter_rows(t, "q_", n, '(', [](std::size_t i) { return i; });
  add_counter_rows(t, "q_", n, ')', [n](std::size_t i) { return n - i + 1; });
  std::vector<std::string> waiting;
  for (std::size_t i = 1; i <= n; ++i) {
    t.add_row(indexed("q_", i, 0), '$', indexed("s_", i));
    t.add_row(indexed("s_", i), ')', indexed("w_", i));
    t.add_row(indexed("s_", i), '(', indexed("r_", i));
    waiting.push_back(indexed("w_", i));
  }
  add_qft_rows(t, waiting, '$', "p_");
  return t;
}

TwoWayQfaSpec build_m2(std::size_t n_paths) { return complete_partial_table(m2_table(n_paths)); }

PartialTable m3_table(std::size_t n_paths) {
  check_paths(n_paths);
  const std::size_t n = n_paths;
  PartialTable t;
  t.name = "m3";
  t.path_count = n;
  t.input_alphabet = "abc";
  t.initial_state = "q0";
  // Phase 1: a+b+c+ form check.
  t.add_state("q0", kNon, kR);
  t.add_state("q_back_a", kNon, kL);
  t.add_state("q_b", kNon, kR);
  t.add_state("q_back_b", kNon, kL);
  t.add_state("q_c", kNon, kR);
  t.add_state("q_wrap", kNon, kR);
  t.add_state("q_r1", kRej, kS);
  t.add_state("q_r2", kRej, kS);
  // Phase 2: #a vs #b, then #b vs #c.
  add_counter_states(t, "u_", n);
  for (std::size_t k = 1; k <= n; ++k) t.add_state(indexed("v_", k), k == n ? kNon : kRej, k == n ? kR : kS);
  add_counter_states(t, "t_", n);
  for (std::size_t k = 1; k <= n; ++k) t.add_state(indexed("p_", k), k == n ? kAcc : kRej, kS);

  t.add_row("q0", '#', "q0");
  t.add_row("q0", 'a', "q0");
  t.add_row("q0", 'b', "q_back_a");
  t.add_row("q0", 'c', "q_r1");
  t.add_row("q0", '$', "q_r1");
  t.add_row("q_back_a", 'a', "q_b");
  t.add_row("q_back_a", '#', "q_r1");
  t.add_row("q_b", 'b', "q_b");
  t.add_row("q_b", 'c', "q_back_b");
  t.add_row("q_b", 'a', "q_r1");
  t.add_row("q_b", '$', "q_r2");
  t.add_row("q_back_b", 'b', "q_c");
  t.add_row("q_c", 'c', "q_c");
  t.add_row("q_c", 'a', "q_r2");
  t.add_row("q_c", 'b', "q_r1");
  t.add_row("q_c", '$', "q_wrap");

  add_uniform_split(t, "q_wrap", '#', "u_", n);
  add_counter_rows(t, "u_", n, 'a', [](std::size_t i) { return i; });
  add_counter_rows(t, "u_", n, 'b', [n](std::size_t i) { return n - i + 1; });
  std::vector<std::string> first_arrivals;
  for (std::size_t i = 1; i <= n; ++i) {
    t.add_row(indexed("u_", i, 0), 'c', indexed("u_", i, 0));
    first_arrivals.push_back(indexed("u_", i, 0));
  }
  add_qft_rows(t, first_arrivals, '$', "v_");

  add_uniform_split(t, indexed("v_", n), '#', "t_", n);
  std::vector<std::string> second_arrivals;
  for (std::size_t i = 1; i <= n; ++i) {
    t.add_row(indexed("t_", i, 0), 'a', indexed("t_", i, 0));
    second_arrivals.push_back(indexed("t_", i, 0));
  }
  add_counter_rows(t, "t_", n, 'b', [](std::size_t i) { return i; });
  add_counter_rows(t, "t_", n, 'c', [n](std::size_t i) { return n - i + 1; });
  add_qft_rows(t, second_arrivals, '$', "p_");
  return t;
}

TwoWayQfaSpec build_m3(std::size_t n_paths) { return complete_partial_table(m3_table(n_paths)); }

TwoWayQfaSpec build_machine(const std::string& name, std::size_t n_paths) {
  if (name == "m1") return build_m1();
  if (name == "m2") return build_m2(n_paths);
  if (name == "m3") return build_m3(n_paths);
  throw InvalidParameter("unknown machine '" + name + "' (expected m1, m2 or m3)");
}

}  // namespace chemqfa
