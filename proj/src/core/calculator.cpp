#include "grossone/calculator.hpp"

#include "grossone/notation.hpp"
#include "scanner.hpp"

namespace grossone {

namespace {

class Evaluator {
 public:
  Evaluator(std::string_view text, std::size_t max_terms) : in_(text), max_terms_(max_terms) {}

  GrossNumber run() {
    if (in_.at_end()) {
      in_.fail("expression");
    }
    GrossNumber value = expr();
    if (!in_.at_end()) {
      in_.fail("operator or end of input");
    }
    return value;
  }

 private:
  GrossNumber expr() {
    GrossNumber value = product();
    for (;;) {
      if (in_.accept('+')) {
        value += product();
      } else if (in_.accept('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  GrossNumber product() {
    GrossNumber value = unary();
    for (;;) {
      if (in_.accept('*')) {
        value *= unary();
      } else if (in_.accept('/')) {
        GrossNumber divisor = unary();
        value = divide(value, divisor, max_terms_);
      } else {
        return value;
      }
    }
  }

  GrossNumber unary() {
    if (in_.accept('-')) {
      return -unary();
    }
    if (in_.accept('+')) {
      return unary();
    }
    return primary();
  }

  GrossNumber primary() {
    if (in_.accept('(')) {
      GrossNumber value = expr();
      if (!in_.accept(')')) {
        in_.fail("')'");
      }
      return value;
    }
    return in_.unsigned_term();
  }

  detail::Scanner in_;
  std::size_t max_terms_;
};

}  // namespace

GrossNumber evaluate(std::string_view expression, std::size_t max_quotient_terms) {
  return Evaluator(expression, max_quotient_terms).run();
}

}  // namespace grossone
