#pragma once

#include <initializer_list>
#include <string_view>

#include "nullag/expr.hpp"

namespace nullag {

/// Which of t, x, xdot, xddot a parse is allowed to mention.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) allowed_[static_cast<int>(v)] = true;
  }

  static VarSet all() { return VarSet{Var::t, Var::x, Var::xdot, Var::xddot}; }
  static VarSet time_only() { return VarSet{Var::t}; }
  static VarSet gauge_vars() { return VarSet{Var::t, Var::x}; }
  static VarSet lagrangian_vars() { return VarSet{Var::t, Var::x, Var::xdot}; }

  bool contains(Var v) const { return allowed_[static_cast<int>(v)]; }

 private:
  bool allowed_[4] = {false, false, false, false};
};

/// Recursive-descent parser for the expression DSL:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' rational)?
///   atom   := number | ident | func '(' expr ')' | '(' expr ')' | '-' atom
///   func   := ln | exp | sin | cos | abs
///   ident  := t | x | xdot | xddot
///
/// Numbers are decimal literals (optional fraction and exponent). Exponents
/// after '^' are rational constants: 2, -3, 0.5, or (1/3). Throws ParseError
/// on malformed input and ForbiddenVariableError when an identifier is valid
/// but not in `allowed`.
Expr parse_expr(std::string_view source, const VarSet& allowed = VarSet::all());

}  // namespace nullag
