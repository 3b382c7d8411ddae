// Copyright 2026 The bianchi-uqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bianchi/homology.hpp"

#include <charconv>
#include <map>

#include "bianchi/errors.hpp"
#include "bianchi/reidemeister_schreier.hpp"

namespace bianchi {
namespace {

std::string term(const std::string& base, int count) {
  return count == 1 ? base : base + "^{+" + std::to_string(count) + "}";
}

}  // namespace

std::string format_homology(const AbelianGroupType& h) {
  std::map<std::uint64_t, int> torsion;
  for (std::uint64_t q : h.torsion) ++torsion[q];
  std::string out;
  auto join = [&out](const std::string& t) {
    if (!out.empty()) out += '+';
    out += t;
  };
  for (const auto& [q, count] : torsion) join(term("1/" + std::to_string(q), count));
  if (h.free_rank > 0) join(term("1", h.free_rank));
  return out.empty() ? "0" : out;
}

AbelianGroupType parse_homology(const std::string& text) {
  AbelianGroupType h;
  if (text == "0") return h;
  auto fail = [&text](const std::string& why) {
    return ParseError("homology \"" + text + "\": " + why);
  };
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw fail("bad number");
    return v;
  };
  std::vector<std::uint64_t> torsion;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // A term may contain "^{+s}", so split on '+' outside braces.
    std::size_t end = pos;
    int depth = 0;
    while (end < text.size() && (text[end] != '+' || depth > 0)) {
      if (text[end] == '{') ++depth;
      if (text[end] == '}') --depth;
      ++end;
    }
    std::string_view t(text.data() + pos, end - pos);
    pos = end + 1;
    std::uint64_t count = 1;
    if (const auto caret = t.find("^{+"); caret != std::string_view::npos) {
      if (t.back() != '}') throw fail("unterminated exponent");
      count = number(t.substr(caret + 3, t.size() - caret - 4));
      t = t.substr(0, caret);
    }
    if (t == "1") {
      h.free_rank += static_cast<int>(count);
    } else if (t.starts_with("1/")) {
      const std::uint64_t q = number(t.substr(2));
      if (q < 2) throw fail("torsion order below 2");
      torsion.insert(torsion.end(), count, q);
    } else {
      throw fail("unknown term");
    }
  }
  // Normalize to invariant factors.
  IntegerMatrix m(static_cast<int>(torsion.size()), static_cast<int>(torsion.size()));
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    m.at(static_cast<int>(i), static_cast<int>(i)) = torsion[i];
  }
  h.torsion = cokernel(m).torsion;
  return h;
}

IntegerMatrix abelianized_relations(const GroupPresentation& p) {
  IntegerMatrix m(0, p.generator_count());
  for (const Word& r : p.relators()) {
    std::vector<long long> row(static_cast<std::size_t>(p.generator_count()), 0);
    for (Letter x : r) row[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    m.append_row(row);
  }
  return m;
}

AbelianGroupType abelianization(const GroupPresentation& p) {
  return cokernel(abelianized_relations(p));
}

AbelianGroupType subgroup_homology(const SubgroupClass& s) {
  if (!s.parent) throw PreconditionError("subgroup class has no parent");
  const SchreierSystem rs(s.table);
  IntegerMatrix m(0, rs.generator_count());
  for (const Word& r : s.parent->relators()) {
    for (int c = 0; c < s.index(); ++c) m.append_row(rs.rewrite_abelian(r, c));
  }
  return cokernel(m);
}

void annotate(SubgroupClass& s, bool parent_is_torsion_free) {
  if (parent_is_torsion_free || !s.parent->torsion().empty()) {
    s.tags.torsion_free = is_torsion_free(s, parent_is_torsion_free);
  }
  s.tags.covering_type = covering_type(s);
  if (!s.parent->peripheral().empty()) s.tags.cusps = cusp_count(s);
  s.tags.homology = subgroup_homology(s);
}

}  // namespace bianchi
