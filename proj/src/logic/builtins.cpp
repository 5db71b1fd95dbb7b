#include "claimlogic/logic/builtins.hpp"

namespace claimlogic::logic {

const std::set<Functor>& builtin_functors() {
  static const std::set<Functor> table = {
      {"<", 2},  {">", 2},  {"=<", 2}, {">=", 2}, {"=:=", 2},
      {"=", 2},  {"\\=", 2}, {"member", 2}, {"is", 2},
      {"true", 0}, {"fail", 0}, {"false", 0},
  };
  return table;
}

bool is_builtin(const Functor& f) {
  return builtin_functors().count(f) > 0;
}

bool is_arith_builtin(const Functor& f) {
  if (f.arity != 2) return false;
  return f.name == "<" || f.name == ">" || f.name == "=<" || f.name == ">=" ||
         f.name == "=:=" || f.name == "is";
}

}  // namespace claimlogic::logic
