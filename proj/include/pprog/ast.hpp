#ifndef PPROG_AST_HPP
#define PPROG_AST_HPP

#include "pprog/diagnostics.hpp"
#include "pprog/prob.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pprog {

/// One random-variable declaration inside a context scope. Either an
/// unconditional coin (`var A = flip(0.6)`) or a coin whose bias is selected
/// by a previously declared variable (`var B = A ? flip(0.8) : flip(0.1)`).
struct Stmt {
    enum class Kind { Flip, Cond };

    Kind kind = Kind::Flip;
    std::string name;
    Rational bias;          // Flip
    std::string condition;  // Cond
    Rational bias_if_true;
    Rational bias_if_false;
    SourceLoc loc;

    static Stmt flip(std::string name, Rational bias, SourceLoc loc = {}) {
        Stmt s;
        s.kind = Kind::Flip;
        s.name = std::move(name);
        s.bias = std::move(bias);
        s.loc = loc;
        return s;
    }
    static Stmt cond(std::string name, std::string condition, Rational if_true,
                     Rational if_false, SourceLoc loc = {}) {
        Stmt s;
        s.kind = Kind::Cond;
        s.name = std::move(name);
        s.condition = std::move(condition);
        s.bias_if_true = std::move(if_true);
        s.bias_if_false = std::move(if_false);
        s.loc = loc;
        return s;
    }

    friend bool operator==(const Stmt& a, const Stmt& b) {
        return a.kind == b.kind && a.name == b.name && a.bias == b.bias &&
               a.condition == b.condition && a.bias_if_true == b.bias_if_true &&
               a.bias_if_false == b.bias_if_false;
    }
};

/// `def A = component(A1,A2)`
struct ComponentDef {
    std::string name;
    std::vector<std::string> variables;
    SourceLoc loc;

    friend bool operator==(const ComponentDef& a, const ComponentDef& b) {
        return a.name == b.name && a.variables == b.variables;
    }
};

/// `var p = [A,B]` — a named measurement order. `stmts_before` records how
/// many random-variable statements precede it, which is what scope checking
/// and pretty-printing need.
struct JointList {
    std::string name;
    std::vector<std::string> vars;
    size_t stmts_before = 0;
    SourceLoc loc;

    friend bool operator==(const JointList& a, const JointList& b) {
        return a.name == b.name && a.vars == b.vars &&
               a.stmts_before == b.stmts_before;
    }
};

/// A measurement context: `var P1 = context(){ ... return {Infer(...)} };`
/// `joint` is the measurement order declared by `var p = [A,B]` and
/// referenced from the return statement.
struct ContextDef {
    std::string name;
    std::vector<Stmt> statements;
    std::vector<JointList> joint_lists;  // in source order
    std::string joint_name;              // the list the return statement names
    std::vector<std::string> joint;      // resolved measurement order
    std::uint64_t samples = 0;           // Infer({samples:N},...)
    SourceLoc loc;

    friend bool operator==(const ContextDef& a, const ContextDef& b) {
        return a.name == b.name && a.statements == b.statements &&
               a.joint_name == b.joint_name && a.joint == b.joint &&
               a.samples == b.samples && a.joint_lists == b.joint_lists;
    }
};

enum class Design { Auto, NoSignal, Signal, Order };

const char* design_name(Design d);

/// The final `return {model(...)}` of a program.
struct ModelDirective {
    Design design = Design::Auto;
    std::string signal_from;  // Signal only
    std::string signal_to;
    std::vector<std::string> context_names;
    SourceLoc loc;

    friend bool operator==(const ModelDirective& a, const ModelDirective& b) {
        return a.design == b.design && a.signal_from == b.signal_from &&
               a.signal_to == b.signal_to && a.context_names == b.context_names;
    }
};

struct Program {
    std::vector<ComponentDef> components;
    std::vector<ContextDef> contexts;
    ModelDirective directive;

    const ContextDef* find_context(const std::string& name) const {
        for (const auto& c : contexts)
            if (c.name == name) return &c;
        return nullptr;
    }
    const ComponentDef* find_component(const std::string& name) const {
        for (const auto& c : components)
            if (c.name == name) return &c;
        return nullptr;
    }

    friend bool operator==(const Program& a, const Program& b) {
        return a.components == b.components && a.contexts == b.contexts &&
               a.directive == b.directive;
    }
};

/// validate() output: the program plus resolved metadata the pipeline needs.
struct ValidatedProgram {
    Program program;
    /// component of each component variable (empty when no components)
    std::map<std::string, std::string> variable_component;
    /// directive design with Auto resolved to Order when exactly two contexts
    /// share a variable set under different measurement orders
    Design resolved_design = Design::Auto;
};

}  // namespace pprog

#endif
