#include "friezekit/ensemble.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "friezekit/enumerate.hpp"
#include "friezekit/errors.hpp"

namespace friezekit {

YFrieze p_map(const Frieze& frieze) {
  const int n = frieze.width();
  const auto& second = frieze.second_row();
  VerticalKnit knit = [&] {
    try {
      return y_knit_vertical(second, n + 1);
    } catch (const DomainError& e) {
      throw TheoremViolation(std::string("p-map: ") + e.what());
    }
  }();
  if (const auto* blocked = std::get_if<BlockedKnit>(&knit)) {
    throw TheoremViolation("p-map: knitting blocked at row " + std::to_string(blocked->row) +
                           ", column " + std::to_string(blocked->column));
  }
  if (std::holds_alternative<OpenStrip>(knit)) {
    throw TheoremViolation("p-map: knitted pattern does not close by row " +
                           std::to_string(n + 1));
  }
  YFrieze y = std::get<YFrieze>(std::move(knit));
  if (y.width() != n) {
    throw TheoremViolation("p-map: width " + std::to_string(n) + " frieze gave a width " +
                           std::to_string(y.width()) + " Y-frieze");
  }
  if (!y.is_arithmetic()) throw TheoremViolation("p-map: image is not arithmetic");
  return y;
}

std::vector<EquivalenceClass> group_by_second_row(std::span<const Frieze> friezes) {
  std::vector<EquivalenceClass> classes;
  std::map<std::vector<Rational>, std::size_t> index;
  for (const auto& f : friezes) {
    if (f.width() != friezes.front().width()) {
      throw DomainError("group_by_second_row needs friezes of one width");
    }
    const auto& row = f.second_row();
    auto [it, inserted] = index.try_emplace(row, classes.size());
    if (inserted) classes.push_back(EquivalenceClass{row, {}});
    classes[it->second].members.push_back(f);
  }
  if (!friezes.empty()) {
    const bool even = friezes.front().width() % 2 == 0;
    const std::size_t limit = even ? 1 : 2;
    for (const auto& c : classes) {
      if (c.members.size() > limit) {
        throw TheoremViolation("a Y-equivalence class of width " +
                               std::to_string(friezes.front().width()) + " has " +
                               std::to_string(c.members.size()) + " members");
      }
    }
  }
  return classes;
}

namespace {

Diagonal integer_diagonal(const YFrieze& y) {
  Diagonal d;
  for (const auto& x : y.diagonal()) {
    const auto v = x.to_int64();
    if (!v) throw TheoremViolation("diagonal entry " + x.str() + " is not a machine integer");
    d.push_back(*v);
  }
  return d;
}

}  // namespace

SurjectivityReport surjectivity_report(int width, std::int64_t bound, unsigned jobs) {
  SurjectivityReport report;
  report.width = width;
  report.bound = bound;

  const auto friezes = enumerate_friezes(width);
  const auto classes = group_by_second_row(friezes);
  for (const auto& c : classes) {
    (c.members.size() == 1 ? report.classes_size1 : report.classes_size2) += 1;
  }

  std::set<Diagonal> image;
  std::set<Diagonal> escapes;
  const Rational limit{static_cast<long>(bound)};
  for (const auto& c : classes) {
    const YFrieze y = p_map(c.members.front());
    auto d = integer_diagonal(y);
    if (y.max_entry() > limit) escapes.insert(d);
    image.insert(std::move(d));
  }
  report.image_size = image.size();

  SearchConfig cfg{width, bound, jobs};
  std::set<Diagonal> enumerated;
  for (const auto& y : enumerate_arithmetic_yfriezes(cfg)) enumerated.insert(integer_diagonal(y));
  report.enumerated_size = enumerated.size();

  for (const auto& d : enumerated) {
    if (!image.contains(d)) report.missing.push_back(d);
  }
  for (const auto& d : image) {
    if (!enumerated.contains(d) && !escapes.contains(d)) {
      throw TheoremViolation("p-map image pattern within the bound was not found by the search");
    }
  }
  report.bound_escapes.assign(escapes.begin(), escapes.end());
  return report;
}

std::string to_json(const SurjectivityReport& report) {
  nlohmann::ordered_json doc;
  doc["width"] = report.width;
  doc["bound"] = report.bound;
  doc["image_size"] = report.image_size;
  doc["enumerated_size"] = report.enumerated_size;
  doc["missing"] = report.missing;
  doc["bound_escapes"] = report.bound_escapes;
  doc["classes"] = {{"size1", report.classes_size1}, {"size2", report.classes_size2}};
  doc["complete_up_to_bound"] = report.bound;
  return doc.dump(2);
}

}  // namespace friezekit
