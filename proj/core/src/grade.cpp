#include "agcheck/grade.hpp"

#include <cctype>  // for isdigit
#include <limits>  // for numeric_limits

#include "agcheck/error.hpp"

namespace agcheck {

  namespace {

    constexpr std::int64_t int_max = std::numeric_limits<std::int64_t>::max();

    [[noreturn]] void bad(std::string_view text, char const* why) {
      throw InvalidArgument("invalid rational \"" + std::string(text)
                            + "\": " + why);
    }

    // Appends a digit to acc, throwing on overflow.
    void push_digit(std::string_view text, std::int64_t& acc, char c) {
      std::int64_t d = c - '0';
      if (acc > (int_max - d) / 10) {
        bad(text, "too many digits");
      }
      acc = acc * 10 + d;
    }

    std::int64_t parse_digits(std::string_view text, std::string_view digits) {
      if (digits.empty()) {
        bad(text, "expected digits");
      }
      std::int64_t acc = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          bad(text, "unexpected character");
        }
        push_digit(text, acc, c);
      }
      return acc;
    }

  }  // namespace

  rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool             negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (body.empty()) {
      bad(text, "empty");
    }
    rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      std::int64_t num = parse_digits(text, body.substr(0, slash));
      std::int64_t den = parse_digits(text, body.substr(slash + 1));
      if (den == 0) {
        bad(text, "zero denominator");
      }
      out = rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
      std::string_view whole = body.substr(0, dot);
      std::string_view frac  = body.substr(dot + 1);
      if (whole.empty() && frac.empty()) {
        bad(text, "expected digits");
      }
      std::int64_t num = 0;
      std::int64_t den = 1;
      for (char c : whole) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          bad(text, "unexpected character");
        }
        push_digit(text, num, c);
      }
      for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          bad(text, "unexpected character");
        }
        push_digit(text, num, c);
        if (den > int_max / 10) {
          bad(text, "too many digits");
        }
        den *= 10;
      }
      out = rational(num, den);
    } else {
      out = rational(parse_digits(text, body));
    }
    return negative ? -out : out;
  }

  std::string format_rational(rational const& r) {
    return std::to_string(r.numerator()) + "/"
           + std::to_string(r.denominator());
  }

  Grade::Grade(rational value) : _value(value) {
    if (value < 0 || value > 1) {
      throw InvalidArgument("grade " + format_rational(value)
                            + " is outside [0,1]");
    }
  }

  KParam::KParam(rational k) : _k(k) {
    if (k < 0 || k >= 1) {
      throw InvalidArgument("k = " + format_rational(k)
                            + " is outside [0,1)");
    }
    _half = Grade((rational(1) - k) / 2);
  }

}  // namespace agcheck
