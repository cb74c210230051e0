// Exact arithmetic in the ring Z[1/k] of k-ary rationals.
//
// A KRational is numerator * k^(-exponent) with an arbitrary precision
// numerator.  Values are kept canonical: while the exponent is positive the
// numerator is not divisible by k, and zero is (0, 0).  The base travels
// with every value and mixing bases is an error.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "higman/error.hpp"

namespace higman {

  using Integer = boost::multiprecision::cpp_int;

  inline Integer ipow(unsigned base, std::uint64_t e) {
    Integer result = 1;
    Integer b      = base;
    while (e > 0) {
      if (e & 1U) {
        result *= b;
      }
      e >>= 1U;
      if (e > 0) {
        b *= b;
      }
    }
    return result;
  }

  // Map a residue into {1, ..., k-1}, the convention used for D-class
  // indices.
  inline unsigned residue_1_to_km1(Integer const& value, unsigned k) {
    unsigned m = k - 1;
    auto     r = static_cast<unsigned>(value % m);
    return r == 0 ? m : r;
  }

  struct KDigits {
    Integer               integer_part;
    std::vector<unsigned> fraction;  // no trailing zero
  };

  class KRational {
   public:
    explicit KRational(unsigned k) : _k(k) {
      check_base(k);
    }

    KRational(unsigned k, Integer numerator, std::uint64_t exponent)
        : _k(k), _num(std::move(numerator)), _exp(exponent) {
      check_base(k);
      if (_num < 0) {
        detail::fail(ErrorCode::NegativeResult, "negative numerator");
      }
      normalize();
    }

    static KRational zero(unsigned k) {
      return KRational(k);
    }

    static KRational one(unsigned k) {
      return KRational(k, 1, 0);
    }

    // k^(-n)
    static KRational unit(unsigned k, std::uint64_t n) {
      return KRational(k, 1, n);
    }

    [[nodiscard]] unsigned base() const noexcept {
      return _k;
    }
    [[nodiscard]] Integer const& numerator() const noexcept {
      return _num;
    }
    [[nodiscard]] std::uint64_t exponent() const noexcept {
      return _exp;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _num == 0;
    }

    // The k-reduced numerator: every factor k removed, 0 for zero.
    [[nodiscard]] Integer num() const {
      Integer a = _num;
      if (a == 0) {
        return a;
      }
      while (a % _k == 0) {
        a /= _k;
      }
      return a;
    }

    // Value times k^j.
    [[nodiscard]] KRational scale_pow(std::int64_t j) const {
      if (j >= 0) {
        auto up = static_cast<std::uint64_t>(j);
        if (up <= _exp) {
          return KRational(_k, _num, _exp - up);
        }
        return KRational(_k, _num * ipow(_k, up - _exp), 0);
      }
      return KRational(_k, _num, _exp + static_cast<std::uint64_t>(-j));
    }

    [[nodiscard]] KDigits digits() const {
      KDigits d;
      Integer den      = ipow(_k, _exp);
      d.integer_part   = _num / den;
      Integer rem      = _num % den;
      for (std::uint64_t i = 0; i < _exp; ++i) {
        rem *= _k;
        d.fraction.push_back(static_cast<unsigned>(rem / den));
        rem %= den;
      }
      return d;
    }

    // Base-k digit sum reduced into {1..k-1}; agrees with num() mod (k-1).
    [[nodiscard]] unsigned digitsum_mod() const {
      if (is_zero()) {
        detail::fail(ErrorCode::ZeroValue, "digit sum of zero");
      }
      KDigits d   = digits();
      Integer sum = 0;
      for (Integer ip = d.integer_part; ip > 0; ip /= _k) {
        sum += ip % _k;
      }
      for (unsigned digit : d.fraction) {
        sum += digit;
      }
      return residue_1_to_km1(sum, _k);
    }

    friend KRational operator+(KRational const& x, KRational const& y) {
      same_base(x, y);
      if (x._exp >= y._exp) {
        return KRational(x._k, x._num + y._num * ipow(x._k, x._exp - y._exp), x._exp);
      }
      return KRational(x._k, x._num * ipow(x._k, y._exp - x._exp) + y._num, y._exp);
    }

    friend KRational operator-(KRational const& x, KRational const& y) {
      same_base(x, y);
      if (x < y) {
        detail::fail(ErrorCode::NegativeResult,
                     x.to_string() + " - " + y.to_string());
      }
      if (x._exp >= y._exp) {
        return KRational(x._k, x._num - y._num * ipow(x._k, x._exp - y._exp), x._exp);
      }
      return KRational(x._k, x._num * ipow(x._k, y._exp - x._exp) - y._num, y._exp);
    }

    friend KRational operator*(KRational const& x, KRational const& y) {
      same_base(x, y);
      return KRational(x._k, x._num * y._num, x._exp + y._exp);
    }

    KRational& operator+=(KRational const& y) {
      return *this = *this + y;
    }
    KRational& operator-=(KRational const& y) {
      return *this = *this - y;
    }

    friend std::strong_ordering operator<=>(KRational const& x, KRational const& y) {
      same_base(x, y);
      Integer lhs = x._num, rhs = y._num;
      if (x._exp > y._exp) {
        rhs *= ipow(x._k, x._exp - y._exp);
      } else if (y._exp > x._exp) {
        lhs *= ipow(x._k, y._exp - x._exp);
      }
      if (lhs < rhs) {
        return std::strong_ordering::less;
      }
      if (lhs > rhs) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    // Structural: different bases compare unequal.
    friend bool operator==(KRational const& x, KRational const& y) {
      return x._k == y._k && x._num == y._num && x._exp == y._exp;
    }

    // `0.d1d2..dn`, `1`, `0` for k <= 10; `0.[10,0,3]` style for k > 10.
    [[nodiscard]] std::string to_string() const {
      KDigits     d = digits();
      std::string out;
      if (_k <= 10) {
        out = integer_digits(d.integer_part);
        if (!d.fraction.empty()) {
          out += '.';
          for (unsigned digit : d.fraction) {
            out += static_cast<char>('0' + digit);
          }
        }
        return out;
      }
      if (d.integer_part < _k) {
        out = d.integer_part.str();
      } else {
        out = bracketed(base_k_digits(d.integer_part));
      }
      if (!d.fraction.empty()) {
        out += '.';
        out += bracketed(d.fraction);
      }
      return out;
    }

    static KRational parse(unsigned k, std::string_view text) {
      check_base(k);
      auto bad = [&](char const* why) -> ParseError {
        return ParseError("bad k-ary number '" + std::string(text) + "': " + why);
      };
      std::string_view ip = text, fp;
      if (auto dot = text.find('.'); dot != std::string_view::npos) {
        ip = text.substr(0, dot);
        fp = text.substr(dot + 1);
        if (fp.empty()) {
          throw bad("empty fraction");
        }
      }
      if (ip.empty()) {
        throw bad("empty integer part");
      }
      std::vector<unsigned> idig, fdig;
      if (k <= 10) {
        idig = plain_digits(ip, k, bad);
        fdig = fp.empty() ? std::vector<unsigned>{} : plain_digits(fp, k, bad);
      } else {
        if (ip.front() == '[') {
          idig = list_digits(ip, k, bad);
        } else {
          idig = {decimal_digit(ip, k, bad)};
        }
        if (!fp.empty()) {
          fdig = list_digits(fp, k, bad);
        }
      }
      if (!fdig.empty() && fdig.back() == 0) {
        throw bad("trailing zero digit");
      }
      Integer a = 0;
      for (unsigned d : idig) {
        a = a * k + d;
      }
      for (unsigned d : fdig) {
        a = a * k + d;
      }
      return KRational(k, a, fdig.size());
    }

   private:
    static void check_base(unsigned k) {
      if (k < 2) {
        detail::fail(ErrorCode::BaseTooSmall, "k = " + std::to_string(k));
      }
    }

    static void same_base(KRational const& x, KRational const& y) {
      if (x._k != y._k) {
        detail::fail(ErrorCode::BaseMismatch,
                     std::to_string(x._k) + " vs " + std::to_string(y._k));
      }
    }

    void normalize() {
      if (_num == 0) {
        _exp = 0;
        return;
      }
      while (_exp > 0 && _num % _k == 0) {
        _num /= _k;
        --_exp;
      }
    }

    [[nodiscard]] std::vector<unsigned> base_k_digits(Integer v) const {
      std::vector<unsigned> out;
      while (v > 0) {
        out.push_back(static_cast<unsigned>(v % _k));
        v /= _k;
      }
      if (out.empty()) {
        out.push_back(0);
      }
      return {out.rbegin(), out.rend()};
    }

    [[nodiscard]] std::string integer_digits(Integer const& v) const {
      std::string s;
      for (unsigned d : base_k_digits(v)) {
        s += static_cast<char>('0' + d);
      }
      return s;
    }

    static std::string bracketed(std::vector<unsigned> const& ds) {
      std::string s = "[";
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(ds[i]);
      }
      return s + "]";
    }

    template <typename Bad>
    static std::vector<unsigned> plain_digits(std::string_view s, unsigned k, Bad bad) {
      std::vector<unsigned> out;
      for (char c : s) {
        if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= k) {
          throw bad("digit out of range");
        }
        out.push_back(static_cast<unsigned>(c - '0'));
      }
      return out;
    }

    template <typename Bad>
    static unsigned decimal_digit(std::string_view s, unsigned k, Bad bad) {
      if (s.empty() || s.size() > 9) {
        throw bad("bad digit");
      }
      unsigned v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          throw bad("bad digit");
        }
        v = v * 10 + static_cast<unsigned>(c - '0');
      }
      if (v >= k) {
        throw bad("digit out of range");
      }
      return v;
    }

    template <typename Bad>
    static std::vector<unsigned> list_digits(std::string_view s, unsigned k, Bad bad) {
      if (s.size() < 3 || s.front() != '[' || s.back() != ']') {
        throw bad("expected bracketed digit list");
      }
      s = s.substr(1, s.size() - 2);
      std::vector<unsigned> out;
      while (true) {
        auto comma = s.find(',');
        out.push_back(decimal_digit(s.substr(0, comma), k, bad));
        if (comma == std::string_view::npos) {
          break;
        }
        s = s.substr(comma + 1);
      }
      return out;
    }

    unsigned      _k;
    Integer       _num = 0;
    std::uint64_t _exp = 0;
  };

}  // namespace higman
