// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "skry/skry.hpp"

using namespace skry;

namespace {

struct Criterion {
  int number;
  std::vector<std::string> ids;
  double target;                         // seconds, over the checks in `timed`
  std::vector<std::string> timed = {};  // defaults to ids
};

const std::vector<Criterion> kCriteria = {
    {1, {"jacobi-all-params"}, 5},
    {2, {"iso-family"}, 5},
    {3, {"env-dim-19", "der-dim-19"}, 30},
    {4, {"sandwich-3", "sandwich-der-4"}, 10},
    {5, {"torus-census"}, 300},
    {6, {"centralizer-census"}, 600},
    {7, {"cartan-all", "rank-4"}, 300, {"torus-census", "cartan-all", "rank-4"}},
    {8, {"thin-all-4-tori"}, 300},
    {9, {"aut-relations"}, 30},
    {10, {"exp-order-16", "aut-order-128"}, 600},
    {11, {"invariant-catalog"}, 120},
    {12, {"universal-group"}, 5},
    {13, {"profile-skryabin"}, 600},
    {14, {"semisimple-form"}, 10},
};

}  // namespace

int main() {
  const std::vector<CheckResult> results = run_skryabin_checks({}, &std::cerr);
  std::map<std::string, const CheckResult*> by_id;
  for (const auto& r : results) by_id[r.id] = &r;

  bool all = true;
  for (const Criterion& c : kCriteria) {
    bool correct = true;
    double elapsed = 0;
    std::string ids, values, notes;
    for (const auto& id : c.ids) {
      const CheckResult& r = *by_id.at(id);
      correct = correct && r.correct;
      ids += (ids.empty() ? "" : " / ") + id;
      values += (values.empty() ? "" : "; ") + r.computed;
      if (!r.correct) values += " [expected " + r.expected + "]";
      if (!r.note.empty()) notes += "      " + r.note + "\n";
    }
    for (const auto& id : c.timed.empty() ? c.ids : c.timed) elapsed += by_id.at(id)->elapsed;
    const bool pass = correct && elapsed <= c.target;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, target < %.0f s", elapsed, c.target);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.number << ". " << ids << "  (" << timing << ")  " << values << '\n' << notes;
  }
  std::cout << (all ? "all 14 criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
