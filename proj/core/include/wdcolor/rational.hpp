// Copyright 2026 The wdcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WDCOLOR_RATIONAL_HPP_
#define WDCOLOR_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace wdcolor {

// Arbitrary precision rational, always kept canonical.
using Rational = mpq_class;

// Parses "<int>" or "<int>/<int>". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// A nonnegative rational or +infinity. Infinity absorbs addition and is
// strictly greater than every finite value.
class Length {
 public:
  Length() = default;
  Length(const Rational& value) : value_(value) {}  // NOLINT: implicit
  Length(long value) : value_(value) {}             // NOLINT: implicit

  static Length infinity() {
    Length l;
    l.infinite_ = true;
    return l;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Precondition: is_finite().
  const Rational& value() const { return value_; }

  Length& operator+=(const Length& other) {
    if (infinite_ || other.infinite_) {
      infinite_ = true;
      value_ = 0;
    } else {
      value_ += other.value_;
    }
    return *this;
  }
  friend Length operator+(Length a, const Length& b) {
    a += b;
    return a;
  }

  friend bool operator==(const Length& a, const Length& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Length& a, const Length& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }

 private:
  bool infinite_ = false;
  Rational value_{0};
};

// Parses a rational or "inf".
Length parse_length(std::string_view text);
std::string to_string(const Length& value);
std::ostream& operator<<(std::ostream& os, const Length& value);

}  // namespace wdcolor

#endif  // WDCOLOR_RATIONAL_HPP_
