#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace trineg {

using Atom = std::string;
using AtomSet = std::set<Atom>;

enum class Kind { Pos, Not, Weak, Strict };

struct Literal {
  Kind kind;
  Atom atom;
  auto operator<=>(const Literal&) const = default;
};

inline Literal pos(Atom a) { return {Kind::Pos, std::move(a)}; }
inline Literal neg(Atom a) { return {Kind::Not, std::move(a)}; }
inline Literal wneg(Atom a) { return {Kind::Weak, std::move(a)}; }
inline Literal sneg(Atom a) { return {Kind::Strict, std::move(a)}; }

// Body literal order is preserved; equality is structural over the sequence.
struct Clause {
  Atom head;
  std::vector<Literal> body;
  auto operator<=>(const Clause&) const = default;
};

// Clause set, duplicate-free, sorted; base is every atom occurring in it.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const AtomSet& base() const { return base_; }

  bool operator==(const Program&) const = default;

 private:
  std::vector<Clause> clauses_;
  AtomSet base_;
};

struct Goal {
  std::vector<Literal> body;  // empty = the empty goal
  auto operator<=>(const Goal&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

Program parse_program(const std::string& text);
Goal parse_goal(const std::string& text);

std::string render(const Literal& lit);
std::string render(const Clause& clause);
std::string render(const Program& program);
std::string render(const Goal& goal);
std::string render(const AtomSet& atoms);

}  // namespace trineg
