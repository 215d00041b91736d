#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ezdop/polynomial.hpp"

namespace ezdop {

// Statements of the line-oriented job format. Polynomials stay as text
// until execution binds them to a ring.

struct RingDecl {
    std::string name;
    std::vector<std::pair<std::string, int>> vars;  // name : degree
    std::vector<std::string> relations;             // may be empty (free ring)
    bool operator==(const RingDecl&) const = default;
};

struct ElemDecl {
    std::string name, ring, poly;
    bool operator==(const ElemDecl&) const = default;
};

struct QuotientDecl {
    std::string name, base, elem;
    bool operator==(const QuotientDecl&) const = default;
};

struct ComplexDecl {
    std::string name, ring;
    std::vector<std::pair<int, std::vector<int>>> modules;  // index -> twists
    std::vector<std::pair<int, std::vector<std::vector<std::string>>>> maps;  // index -> rows
    bool operator==(const ComplexDecl&) const = default;
};

struct CheckEzdCmd {
    std::string ring, x, y;
    bool operator==(const CheckEzdCmd&) const = default;
};

struct AnnCmd {
    std::string elem, ring;
    bool operator==(const AnnCmd&) const = default;
};

struct ResolveCmd {
    std::string ring;
    std::vector<std::string> gens;  // element names, or inline polynomials
    bool inline_polys = false;
    int hmax = 3;
    int64_t dmax = 8;
    bool operator==(const ResolveCmd&) const = default;
};

struct OperatorsCmd {
    std::string complex, x, y;
    std::vector<std::string> zs;
    bool operator==(const OperatorsCmd&) const = default;
};

struct HomotopyCmd {
    std::string map;
    int window_lo = 0, window_hi = 0;
    bool operator==(const HomotopyCmd&) const = default;
};

struct ReproduceCmd {
    bool operator==(const ReproduceCmd&) const = default;
};

using Statement = std::variant<RingDecl, ElemDecl, QuotientDecl, ComplexDecl, CheckEzdCmd,
                               AnnCmd, ResolveCmd, OperatorsCmd, HomotopyCmd, ReproduceCmd>;

struct JobFile {
    std::vector<Statement> statements;
    bool operator==(const JobFile&) const = default;
};

// Throws ParseError with 1-based line/column on syntax errors.
JobFile parse_jobfile(std::string_view text);
std::string print_jobfile(const JobFile& job);

}  // namespace ezdop
