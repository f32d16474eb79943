// Copyright (c) horngraph contributors.
// SPDX-License-Identifier: Apache-2.0
#include "chc/ast.hpp"

#include <cassert>

namespace horn::chc {

const char *term_op_name(TermOp op) {
    switch (op) {
        case TermOp::add: return "+";
        case TermOp::sub: return "-";
        case TermOp::mul: return "*";
    }
    return "?";
}

const char *cmp_op_name(CmpOp op) {
    switch (op) {
        case CmpOp::eq: return "=";
        case CmpOp::le: return "<=";
        case CmpOp::lt: return "<";
        case CmpOp::ge: return ">=";
        case CmpOp::gt: return ">";
        case CmpOp::ne: return "!=";
    }
    return "?";
}

TermPtr Term::var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::var;
    t->name_ = std::move(name);
    return t;
}

TermPtr Term::constant(BigInt value) {
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::constant;
    t->value_ = std::move(value);
    return t;
}

TermPtr Term::apply(TermOp op, std::vector<TermPtr> args) {
    assert(!args.empty() && args.size() <= 2);
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::apply;
    t->op_ = op;
    t->args_ = std::move(args);
    return t;
}

bool term_equal(const TermPtr &a, const TermPtr &b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Term::Kind::var: return a->name() == b->name();
        case Term::Kind::constant: return a->value() == b->value();
        case Term::Kind::apply: {
            if (a->op() != b->op() || a->args().size() != b->args().size()) return false;
            for (size_t i = 0; i < a->args().size(); ++i)
                if (!term_equal(a->args()[i], b->args()[i])) return false;
            return true;
        }
    }
    return false;
}

void collect_vars(const TermPtr &t, std::set<std::string> &out) {
    if (!t) return;
    switch (t->kind()) {
        case Term::Kind::var: out.insert(t->name()); break;
        case Term::Kind::constant: break;
        case Term::Kind::apply:
            for (const auto &a : t->args()) collect_vars(a, out);
            break;
    }
}

TermPtr substitute(const TermPtr &t, const std::map<std::string, TermPtr> &subst) {
    if (!t) return t;
    switch (t->kind()) {
        case Term::Kind::var: {
            auto it = subst.find(t->name());
            return it == subst.end() ? t : it->second;
        }
        case Term::Kind::constant: return t;
        case Term::Kind::apply: {
            std::vector<TermPtr> args;
            args.reserve(t->args().size());
            bool changed = false;
            for (const auto &a : t->args()) {
                args.push_back(substitute(a, subst));
                changed = changed || args.back() != a;
            }
            if (!changed) return t;
            return Term::apply(t->op(), std::move(args));
        }
    }
    return t;
}

Constraint Constraint::make_truth(bool v) {
    Constraint c;
    c.kind = Kind::truth;
    c.truth_value = v;
    return c;
}

Constraint Constraint::make_cmp(CmpOp rel, TermPtr lhs, TermPtr rhs) {
    Constraint c;
    c.kind = Kind::cmp;
    c.rel = rel;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

bool constraint_equal(const Constraint &a, const Constraint &b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Constraint::Kind::truth) return a.truth_value == b.truth_value;
    return a.rel == b.rel && term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
}

void collect_vars(const Constraint &c, std::set<std::string> &out) {
    if (c.kind == Constraint::Kind::cmp) {
        collect_vars(c.lhs, out);
        collect_vars(c.rhs, out);
    }
}

Constraint substitute(const Constraint &c, const std::map<std::string, TermPtr> &subst) {
    if (c.kind == Constraint::Kind::truth) return c;
    return Constraint::make_cmp(c.rel, substitute(c.lhs, subst), substitute(c.rhs, subst));
}

bool atom_equal(const Atom &a, const Atom &b) {
    if (a.symbol != b.symbol || a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!term_equal(a.args[i], b.args[i])) return false;
    return true;
}

bool clause_equal(const Clause &a, const Clause &b) {
    if (a.head.has_value() != b.head.has_value()) return false;
    if (a.head && !atom_equal(*a.head, *b.head)) return false;
    if (a.body.size() != b.body.size() || a.constraint.size() != b.constraint.size()) return false;
    for (size_t i = 0; i < a.body.size(); ++i)
        if (!atom_equal(a.body[i], b.body[i])) return false;
    for (size_t i = 0; i < a.constraint.size(); ++i)
        if (!constraint_equal(a.constraint[i], b.constraint[i])) return false;
    return true;
}

bool system_equal(const ClauseSystem &a, const ClauseSystem &b) {
    if (a.clauses.size() != b.clauses.size()) return false;
    for (size_t i = 0; i < a.clauses.size(); ++i)
        if (!clause_equal(a.clauses[i], b.clauses[i])) return false;
    return a.signatures == b.signatures;
}

std::set<std::string> clause_vars(const Clause &c) {
    std::set<std::string> out;
    if (c.head)
        for (const auto &t : c.head->args) collect_vars(t, out);
    for (const auto &a : c.body)
        for (const auto &t : a.args) collect_vars(t, out);
    for (const auto &cc : c.constraint) collect_vars(cc, out);
    return out;
}

} // namespace horn::chc
