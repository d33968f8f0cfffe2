// Copyright 2026 The braidq Authors
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

#include "braidq/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "braidq/errors.hpp"

namespace braidq {

namespace {

constexpr int kColumnWidth = 4;

bool cancels(Generator a, Generator b) { return a.index == b.index && a.sign != b.sign; }

std::vector<Generator> reduce_letters(const std::vector<Generator>& letters) {
  std::vector<Generator> stack;
  stack.reserve(letters.size());
  for (const auto& g : letters) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return stack;
}

// One bubble pass; returns true if anything moved.
bool commute_pass(std::vector<Generator>& letters) {
  bool moved = false;
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    const int a = letters[k].index;
    const int b = letters[k + 1].index;
    if (std::abs(a - b) > 1 && a > b) {
      std::swap(letters[k], letters[k + 1]);
      moved = true;
    }
  }
  return moved;
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

BraidWord parse(std::string_view text, std::optional<int> strands) {
  BraidWord w;
  std::size_t pos = 0;
  int max_index = 0;
  std::vector<std::size_t> letter_pos;

  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text[pos] != 's') {
      throw ParseError(std::string("expected 's', found '") + text[pos] + "'", pos);
    }
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected generator index after 's'", pos);
    }
    long long index = 0;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > std::numeric_limits<int>::max() / 2) {
        throw ParseError("generator index too large", digits_start);
      }
      ++pos;
    }
    if (index < 1) throw ParseError("generator index must be >= 1", digits_start);

    Sign sign = Sign::kPositive;
    if (pos < text.size() && text[pos] == '\'') {
      sign = Sign::kInverse;
      ++pos;
    } else if (pos < text.size() && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") throw ParseError("expected '^-1'", pos);
      sign = Sign::kInverse;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
        text[pos] != 's') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    w.letters.push_back({static_cast<int>(index), sign});
    letter_pos.push_back(start);
    max_index = std::max(max_index, static_cast<int>(index));
    skip_space();
  }

  if (strands) {
    if (*strands < 2) throw RangeError("a braid needs at least 2 strands");
    w.strands = *strands;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
      if (w.letters[k].index > w.strands - 1) {
        throw RangeError("generator s" + std::to_string(w.letters[k].index) + " at position " +
                         std::to_string(letter_pos[k]) + " needs at least " +
                         std::to_string(w.letters[k].index + 1) + " strands, have " +
                         std::to_string(w.strands));
      }
    }
  } else {
    w.strands = std::max(2, max_index + 1);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(g.index);
    if (g.sign == Sign::kInverse) out += '\'';
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  return {w.strands, reduce_letters(w.letters)};
}

BraidWord commute_normalize(const BraidWord& w) {
  std::vector<Generator> letters = w.letters;
  for (;;) {
    while (commute_pass(letters)) {
    }
    auto reduced = reduce_letters(letters);
    if (reduced.size() == letters.size()) break;
    letters = std::move(reduced);
  }
  return {w.strands, std::move(letters)};
}

DenseMatrix compile(const BraidWord& w, int n_qubits, int dense_cap) {
  if (n_qubits < w.strands) {
    throw ArgumentError("word on " + std::to_string(w.strands) + " strands cannot act on " +
                        std::to_string(n_qubits) + " qubits");
  }
  if (n_qubits > dense_cap) {
    throw SizeError("compiling for " + std::to_string(n_qubits) +
                    " qubits exceeds the dense cap of " + std::to_string(dense_cap) +
                    "; use apply instead");
  }
  DenseMatrix out = DenseMatrix::identity(std::size_t{1} << n_qubits);
  // Accumulate from the right so the sparse generator is always the left
  // operand of matmul.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out = matmul(sigma_dense(it->index, it->sign, n_qubits, dense_cap), out);
  }
  return out;
}

std::size_t apply_inplace(const BraidWord& w, std::span<Complex> amplitudes, int n_qubits) {
  if (n_qubits < w.strands) {
    throw ArgumentError("word on " + std::to_string(w.strands) + " strands cannot act on " +
                        std::to_string(n_qubits) + " qubits");
  }
  std::size_t groups = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    groups += apply_generator_inplace(amplitudes, n_qubits, *it);
  }
  return groups;
}

StateVector apply(const BraidWord& w, const StateVector& psi) {
  StateVector out = psi;
  apply_inplace(w, out.amplitudes(), out.n_qubits());
  return out;
}

std::string render_ascii(const BraidWord& w) {
  const int n = w.strands;
  const std::size_t width = static_cast<std::size_t>(kColumnWidth * (n - 1) + 1);

  std::string labels(width + 2, ' ');
  for (int k = 0; k < n; ++k) {
    const std::string label = std::to_string(k + 1);
    labels.replace(static_cast<std::size_t>(kColumnWidth * k), label.size(), label);
  }

  std::string strands_row(width, ' ');
  for (int k = 0; k < n; ++k) strands_row[static_cast<std::size_t>(kColumnWidth * k)] = '|';

  std::string out = rstrip(labels) + '\n' + strands_row + '\n';
  for (const auto& g : w.letters) {
    check_generator(g, n);
    const std::size_t left = static_cast<std::size_t>(kColumnWidth * (g.index - 1));
    std::string top = strands_row;
    std::string mid = strands_row;
    std::string bottom = strands_row;
    for (std::string* row : {&top, &mid, &bottom}) {
      (*row)[left] = ' ';
      (*row)[left + kColumnWidth] = ' ';
    }
    top[left + 1] = '\\';
    top[left + 3] = '/';
    mid[left + 2] = g.sign == Sign::kPositive ? '\\' : '/';
    bottom[left + 1] = '/';
    bottom[left + 3] = '\\';
    out += rstrip(top) + '\n' + rstrip(mid) + '\n' + rstrip(bottom) + '\n' + strands_row + '\n';
  }
  return out;
}

}  // namespace braidq
