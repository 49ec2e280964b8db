#pragma once

#include <stdexcept>
#include <string>

#include "aubert/duality.hpp"
#include "aubert/jacquet.hpp"
#include "aubert/params.hpp"
#include "aubert/segments.hpp"

namespace aubert {

struct ParseError : std::runtime_error {
  std::size_t position;
  std::string expected;
  std::string found;

  ParseError(std::size_t pos, std::string exp, std::string got)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": expected " + exp +
                           ", found '" + got + "'"),
        position(pos),
        expected(std::move(exp)),
        found(std::move(got)) {}
};

// param := summand ('+' summand)* ; summand := 'phi' ['(' name ')'] '*S' int '*S' int | 'bg'
AParameter parse_a_parameter(const std::string& text, const RhoSigmaContext& ctx);

// lsummand := ['nu^' rat] 'phi' ['(' name ')'] '*S' int | 'bg'
LParameter parse_l_parameter(const std::string& text, const RhoSigmaContext& ctx);

// expr := atom ('x' atom)* '|x' tail | tail
// atom := 'd[' rat ',' rat ']' | 'nu^' rat 'rho' | 'nu rho' | 'rho'
// tail := 'sigma' | 'ds(1/2)' | 'ds(1)' | 'tau+' | 'tau-' | 'rho*sigma'
InducedExpr parse_expr(const std::string& text);

// word := atom-single ('(x)' atom-single)* '(x)' 'sigma' | 'sigma'
Word parse_word(const std::string& text);

// data := 'Ls(' atom (',' atom)* ',' tail ')' | 'Ls(' tail ')'
LanglandsData parse_langlands(const std::string& text);

std::string print(const AParameter& psi);
std::string print(const LParameter& phi);
std::string print(const GLAtom& a);
std::string print(TemperedAtom t);
std::string print(const InducedExpr& e);
std::string print(const Word& w);
std::string print(const FormalSum& s);
std::string print(const LanglandsData& d);
std::string print(const DualOutcome& o);

}  // namespace aubert
