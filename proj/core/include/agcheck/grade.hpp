#ifndef AGCHECK_GRADE_HPP_
#define AGCHECK_GRADE_HPP_

#include <compare>      // for strong_ordering
#include <cstdint>      // for int64_t
#include <string>       // for string
#include <string_view>  // for string_view

#include <boost/rational.hpp>

namespace agcheck {

  using rational = boost::rational<std::int64_t>;

  //! Parses "p/q", an integer, or a finite decimal ("0.8" is exactly 4/5).
  //! Throws InvalidArgument on malformed text, a zero denominator, or
  //! overflow.
  rational parse_rational(std::string_view text);

  //! "p/q" in lowest terms (denominator always printed).
  std::string format_rational(rational const& r);

  //! A membership grade: an exact rational in [0, 1].
  class Grade {
   public:
    Grade() = default;

    explicit Grade(rational value);

    Grade(std::int64_t num, std::int64_t den) : Grade(rational(num, den)) {}

    static Grade parse(std::string_view text) {
      return Grade(parse_rational(text));
    }

    static Grade zero() {
      return Grade();
    }

    static Grade one() {
      return Grade(rational(1));
    }

    rational const& value() const noexcept {
      return _value;
    }

    std::string str() const {
      return format_rational(_value);
    }

    friend bool operator==(Grade const& a, Grade const& b) noexcept {
      return a._value == b._value;
    }

    friend std::strong_ordering operator<=>(Grade const& a, Grade const& b) {
      if (a._value < b._value) {
        return std::strong_ordering::less;
      }
      if (b._value < a._value) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

   private:
    rational _value{0};
  };

  //! The parameter k in [0, 1) of the q_k relations, with (1 - k) / 2.
  class KParam {
   public:
    KParam() : KParam(rational(0)) {}

    explicit KParam(rational k);

    static KParam parse(std::string_view text) {
      return KParam(parse_rational(text));
    }

    rational const& k() const noexcept {
      return _k;
    }

    //! (1 - k) / 2, always in (0, 1/2].
    Grade const& half() const noexcept {
      return _half;
    }

    std::string str() const {
      return format_rational(_k);
    }

   private:
    rational _k;
    Grade    _half;
  };

}  // namespace agcheck

#endif  // AGCHECK_GRADE_HPP_
