#pragma once

#include <string>

#include "qhook/qintegral.hpp"

namespace qhook {

/// A parsed q-integral job: an integrand plus either the full simplex or an
/// explicit step list.
struct QExprJob {
  int nvars = 0;
  MPoly integrand{0};
  bool full_simplex = true;
  std::vector<Step> steps;
};

/// Parses the expression file format used by `qint --expr`:
///
///   # comment
///   vars <n>
///   integrand <expr>
///   simplex                    (default when no step lines appear)
///   step <xi> <lo> <hi>        (lo/hi each one of: 0, 1, x<j>)
///
/// with <expr> one of
///   mul(<expr>, <expr>, ...)
///   sub(<expr>, <expr>)
///   alt(<e1>,...,<ek>; x<i1>,...,x<ik>)
///   mono(x<i>^<p>)  |  mono(x<i>)
///   <integer>
///
/// Variables are written x1..xn. Throws std::invalid_argument on bad input.
QExprJob parse_qexpr(const std::string& text);

/// Runs the job: a fully integrated job yields "<num> / <den>"; a partial
/// step list yields the remaining polynomial.
std::string evaluate_qexpr(const QExprJob& job);

}  // namespace qhook
