// Copyright (c) horngraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace horn::chc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class TermOp { add, sub, mul };
enum class CmpOp { eq, le, lt, ge, gt, ne };

const char *term_op_name(TermOp op);
const char *cmp_op_name(CmpOp op);

/// Linear integer term: variable, constant, or {+,-,*} application.
/// Immutable; subtrees are shared via shared_ptr.
class Term {
public:
    enum class Kind { var, constant, apply };

    static std::shared_ptr<const Term> var(std::string name);
    static std::shared_ptr<const Term> constant(BigInt value);
    static std::shared_ptr<const Term> apply(TermOp op, std::vector<std::shared_ptr<const Term>> args);

    Kind kind() const { return kind_; }
    const std::string &name() const { return name_; }
    const BigInt &value() const { return value_; }
    TermOp op() const { return op_; }
    const std::vector<std::shared_ptr<const Term>> &args() const { return args_; }

private:
    Kind kind_;
    std::string name_;
    BigInt value_;
    TermOp op_ = TermOp::add;
    std::vector<std::shared_ptr<const Term>> args_;
};

using TermPtr = std::shared_ptr<const Term>;

bool term_equal(const TermPtr &a, const TermPtr &b);
void collect_vars(const TermPtr &t, std::set<std::string> &out);
TermPtr substitute(const TermPtr &t, const std::map<std::string, TermPtr> &subst);

/// Comparison atom over linear terms, or a literal truth constant.
struct Constraint {
    enum class Kind { cmp, truth };
    Kind kind = Kind::truth;
    bool truth_value = true; // when kind == truth
    CmpOp rel = CmpOp::eq;
    TermPtr lhs;
    TermPtr rhs;

    static Constraint make_truth(bool v);
    static Constraint make_cmp(CmpOp rel, TermPtr lhs, TermPtr rhs);
};

bool constraint_equal(const Constraint &a, const Constraint &b);
void collect_vars(const Constraint &c, std::set<std::string> &out);
Constraint substitute(const Constraint &c, const std::map<std::string, TermPtr> &subst);

struct Atom {
    std::string symbol;
    std::vector<TermPtr> args;
};

bool atom_equal(const Atom &a, const Atom &b);

/// head == nullopt encodes a false head.
struct Clause {
    std::optional<Atom> head;
    std::vector<Atom> body;
    std::vector<Constraint> constraint;
    int clause_id = 0;
};

bool clause_equal(const Clause &a, const Clause &b);

struct ClauseSystem {
    std::vector<Clause> clauses;
    std::map<std::string, int> signatures; // relation symbol -> arity
};

bool system_equal(const ClauseSystem &a, const ClauseSystem &b);

/// Free variables of a clause (all variables; CHC vars are clause-scoped).
std::set<std::string> clause_vars(const Clause &c);

} // namespace horn::chc
