#ifndef KNIT_RATIONAL_HPP_
#define KNIT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "knit/errors.hpp"

namespace knit {

  //! Exact rational number with arbitrary-precision numerator and
  //! denominator. Always kept in lowest terms with a positive denominator.
  class Rational {
   public:
    using integer_type = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(runtime/explicit)
    Rational(integer_type const& numerator, integer_type const& denominator) {
      if (denominator == 0) {
        throw InvalidInput("rational with zero denominator");
      }
      value_ = value_type(numerator, denominator);
    }

    //! Parses "p", "-p", "p/q" or "-p/q" with decimal digits only.
    static Rational parse(std::string_view text) {
      auto digits = [](std::string_view s) {
        if (s.empty()) {
          return false;
        }
        for (char c : s) {
          if (c < '0' || c > '9') {
            return false;
          }
        }
        return true;
      };
      std::string_view body = text;
      bool negative = false;
      if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
      }
      auto slash = body.find('/');
      std::string_view num = body.substr(0, slash);
      std::string_view den
          = slash == std::string_view::npos ? std::string_view("1")
                                            : body.substr(slash + 1);
      if (!digits(num) || !digits(den)) {
        throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
      }
      integer_type n{std::string(num)};
      integer_type d{std::string(den)};
      if (d == 0) {
        throw InvalidInput("rational \"" + std::string(text)
                           + "\" has zero denominator");
      }
      return Rational(negative ? integer_type(-n) : n, d);
    }

    integer_type numerator() const {
      return boost::multiprecision::numerator(value_);
    }
    integer_type denominator() const {
      return boost::multiprecision::denominator(value_);
    }

    bool is_zero() const {
      return value_ == 0;
    }

    //! Canonical text: "p" for integers, "p/q" otherwise.
    std::string str() const {
      integer_type d = denominator();
      if (d == 1) {
        return numerator().str();
      }
      return numerator().str() + "/" + d.str();
    }

    Rational operator-() const {
      return Rational(value_type(-value_));
    }
    Rational& operator+=(Rational const& o) {
      value_ += o.value_;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      value_ -= o.value_;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      value_ *= o.value_;
      return *this;
    }
    Rational& operator/=(Rational const& o) {
      if (o.is_zero()) {
        throw InvalidInput("division by zero");
      }
      value_ /= o.value_;
      return *this;
    }

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    friend bool operator==(Rational const& a, Rational const& b) {
      return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      if (a.value_ < b.value_) {
        return std::strong_ordering::less;
      }
      if (a.value_ > b.value_) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, Rational const& r) {
      return os << r.str();
    }

   private:
    using value_type = boost::multiprecision::cpp_rational;
    explicit Rational(value_type v) : value_(std::move(v)) {}

    value_type value_;
  };

}  // namespace knit

#endif  // KNIT_RATIONAL_HPP_
