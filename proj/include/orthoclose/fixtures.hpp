#pragma once

// Named example structures. The hand-transcribed ones (L1, L2, L3, P8,
// P10) are frozen here; each rel line carries the picture coordinates
// (x,y) of the two endpoints of the drawn cover edge. A straight edge
// drawn through an intermediate node is transcribed as two covers.

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "document.hpp"
#include "error.hpp"

namespace orthoclose {

namespace fixture_text {

inline constexpr std::string_view kL1 = R"(poset L1
# 0(25,10) a(10,25) b(40,25) c(25,40) d(85,25) e(70,40) g(85,40) f(100,40) 1(85,55)
elements 0 a b c d e f g 1
rel 0 a  # (25,10)-(10,25)
rel 0 b  # (25,10)-(40,25)
rel a c  # (10,25)-(25,40)
rel b c  # (40,25)-(25,40)
rel 0 d  # (25,10)-(85,25)
rel a e  # (10,25)-(70,40)
rel b f  # (40,25)-(100,40)
rel c 1  # (25,40)-(85,55)
rel d e  # (85,25)-(70,40)
rel d g  # (85,25)-(85,40), lower half of the d-1 vertical
rel d f  # (85,25)-(100,40)
rel g 1  # (85,40)-(85,55), upper half of the d-1 vertical
rel e 1  # (70,40)-(85,55)
rel f 1  # (100,40)-(85,55)
)";

inline constexpr std::string_view kL2 = R"(poset L2
# 0(25,10) b(10,25) a(35,20) c(35,30) 1(25,40)
elements 0 a b c 1
rel 0 a  # (25,10)-(35,20)
rel 0 b  # (25,10)-(10,25)
rel a c  # (35,20)-(35,30)
rel b 1  # (10,25)-(25,40)
rel c 1  # (35,30)-(25,40)
)";

inline constexpr std::string_view kL3 = R"(poset L3
# 0(25,10) a(10,25) b(25,25) c(40,25) d(10,40) e(25,40) f(40,40) g(25,55) 1(25,70)
elements 0 a b c d e f g 1
rel 0 a  # (25,10)-(10,25)
rel 0 b  # (25,10)-(25,25)
rel 0 c  # (25,10)-(40,25)
rel a d  # (10,25)-(10,40)
rel a e  # (10,25)-(25,40)
rel b d  # (25,25)-(10,40)
rel b f  # (25,25)-(40,40)
rel c e  # (40,25)-(25,40)
rel c f  # (40,25)-(40,40)
rel d g  # (10,40)-(25,55)
rel e g  # (25,40)-(25,55)
rel f g  # (40,40)-(25,55)
rel g 1  # (25,55)-(25,70)
)";

inline constexpr std::string_view kP8 = R"(poset P8
# 0(25,10) a(15,20) b(35,20) c(5,30) d(15,30) e(35,30) f(45,30) 1(25,40)
elements 0 a b c d e f 1
rel 0 a  # (25,10)-(15,20), lower half of the 0-c diagonal
rel a c  # (15,20)-(5,30), upper half of the 0-c diagonal
rel 0 b  # (25,10)-(35,20), lower half of the 0-f diagonal
rel b f  # (35,20)-(45,30), upper half of the 0-f diagonal
rel a d  # (15,20)-(15,30)
rel a e  # (15,20)-(35,30)
rel b d  # (35,20)-(15,30)
rel b e  # (35,20)-(35,30)
rel c 1  # (5,30)-(25,40)
rel d 1  # (15,30)-(25,40)
rel e 1  # (35,30)-(25,40)
rel f 1  # (45,30)-(25,40)
)";

inline constexpr std::string_view kP10 = R"(poset P10
# 0(47.5,10) a(25,25) b(40,25) c(55,25) d(70,25) e(25,40) f(40,40) g(55,40) h(70,40) 1(47.5,55)
elements 0 a b c d e f g h 1
rel 0 a  # (47.5,10)-(25,25)
rel 0 b  # (47.5,10)-(40,25)
rel 0 c  # (47.5,10)-(55,25)
rel 0 d  # (47.5,10)-(70,25)
rel a e  # (25,25)-(25,40)
rel a f  # (25,25)-(40,40)
rel a g  # (25,25)-(55,40)
rel b e  # (40,25)-(25,40)
rel b f  # (40,25)-(40,40)
rel b h  # (40,25)-(70,40)
rel c e  # (55,25)-(25,40)
rel c g  # (55,25)-(55,40)
rel c h  # (55,25)-(70,40)
rel d f  # (70,25)-(40,40)
rel d g  # (70,25)-(55,40)
rel d h  # (70,25)-(70,40)
rel e 1  # (25,40)-(47.5,55)
rel f 1  # (40,40)-(47.5,55)
rel g 1  # (55,40)-(47.5,55)
rel h 1  # (70,40)-(47.5,55)
)";

}  // namespace fixture_text

/// M(n): an n-element antichain a1..an between 0 and 1.
inline PosetDocument diamond_fixture(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kUnknownFixture, "M(n) needs n >= 1");
  PosetDocument doc{"M(" + std::to_string(n) + ")", {"0"}, {}, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i);
    doc.labels.push_back(a);
    doc.relations.emplace_back("0", a);
    doc.relations.emplace_back(a, "1");
  }
  doc.labels.push_back("1");
  doc.relation_lines.assign(doc.relations.size(), 0);
  return doc;
}

/// B(n): subsets of an n-set as bit strings; B(0) is the single element "0".
inline PosetDocument boolean_fixture(std::size_t n) {
  if (n > 12) throw Error(ErrorCode::kUnknownFixture, "B(n) is limited to n <= 12");
  PosetDocument doc{"B(" + std::to_string(n) + ")", {}, {}, {}};
  auto label = [n](std::size_t m) {
    if (n == 0) return std::string("0");
    std::string s;
    for (std::size_t b = 0; b < n; ++b) s += ((m >> (n - 1 - b)) & 1U) ? '1' : '0';
    return s;
  };
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) doc.labels.push_back(label(m));
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    for (std::size_t b = 0; b < n; ++b)
      if (!((m >> b) & 1U)) doc.relations.emplace_back(label(m), label(m | (std::size_t{1} << b)));
  doc.relation_lines.assign(doc.relations.size(), 0);
  return doc;
}

/// C(n): the chain 0 < 1 < ... < n-1.
inline PosetDocument chain_fixture(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kUnknownFixture, "C(n) needs n >= 1");
  PosetDocument doc{"C(" + std::to_string(n) + ")", {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) doc.labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) doc.relations.emplace_back(doc.labels[i], doc.labels[i + 1]);
  doc.relation_lines.assign(doc.relations.size(), 0);
  return doc;
}

/// Looks up L1, L2, L3, P8, P10, M(n), B(n) or C(n).
inline PosetDocument fixture(const std::string& name) {
  if (name == "L1") return parse_poset(std::string(fixture_text::kL1));
  if (name == "L2") return parse_poset(std::string(fixture_text::kL2));
  if (name == "L3") return parse_poset(std::string(fixture_text::kL3));
  if (name == "P8") return parse_poset(std::string(fixture_text::kP8));
  if (name == "P10") return parse_poset(std::string(fixture_text::kP10));
  static const std::regex family(R"(([MBC])\((\d{1,4})\))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::size_t n = std::stoul(m[2].str());
    switch (m[1].str()[0]) {
      case 'M': return diamond_fixture(n);
      case 'B': return boolean_fixture(n);
      default: return chain_fixture(n);
    }
  }
  throw Error(ErrorCode::kUnknownFixture, "no fixture named '" + name + "'");
}

/// The fixtures exercised by the test and check suites.
inline std::vector<std::string> standard_fixture_names() {
  return {"L1", "L2", "L3", "P8", "P10", "M(2)", "M(3)", "M(5)", "B(0)", "B(1)", "B(2)", "B(3)", "C(3)"};
}

}  // namespace orthoclose
