// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "msst/constructions.hpp"
#include "msst/exact_solver.hpp"
#include "msst/json_io.hpp"
#include "msst/verifier.hpp"
#include "support/oracles.hpp"

using namespace msst;

namespace {

int failures = 0;

void criterion(const std::string& label,
               const std::function<void(std::ostringstream&, std::ostringstream&)>& body) {
    std::ostringstream detail, note;
    bool ok = true;
    try {
        body(detail, note);
        ok = detail.str().empty();
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        ok = false;
    }
    if (ok) {
        std::cout << "[PASS] " << label;
        if (!note.str().empty()) std::cout << " (" << note.str() << ")";
        std::cout << "\n";
    } else {
        std::cout << "[FAIL] " << label << ": " << detail.str() << "\n";
        ++failures;
    }
}

ProductGraph hamming(const std::vector<int>& dims) {
    std::vector<FactorSpec> fs;
    for (int n : dims) fs.push_back({FactorKind::Complete, n});
    return ProductGraph(fs);
}

ProductGraph grid(const std::vector<int>& dims) {
    std::vector<FactorSpec> fs;
    for (int n : dims) fs.push_back({FactorKind::Path, n});
    return ProductGraph(fs);
}

// All non-decreasing tuples of the given length with entries in [2, max_n].
std::vector<std::vector<int>> sorted_tuples(int length, int max_n) {
    std::vector<std::vector<int>> out;
    std::vector<int> dims(length, 2);
    for (;;) {
        out.push_back(dims);
        int i = length - 1;
        while (i >= 0 && dims[i] == max_n) --i;
        if (i < 0) break;
        ++dims[i];
        for (int j = i + 1; j < length; ++j) dims[j] = dims[i];
    }
    return out;
}

long long product_of(const std::vector<int>& dims) {
    long long p = 1;
    for (int n : dims) p *= n;
    return p;
}

std::string label_of(const std::vector<int>& dims) {
    std::ostringstream s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s << 'x';
        s << dims[i];
    }
    return s.str();
}

}  // namespace

int main() {
    criterion("1. Hamming closed form, d<=4, n_i<=5", [](std::ostringstream& out, std::ostringstream& note) {
        int instances = 0;
        for (int d = 1; d <= 4; ++d) {
            for (const auto& dims : sorted_tuples(d, 5)) {
                if (product_of(dims) > 1000) continue;
                ConstructionResult r = hamming_optimal_tree(dims);
                int expect = dims.front() == 2 ? 2 * d - 1 : 2 * d;
                int measured = max_stretch(r.graph, r.tree).value;
                ++instances;
                if (measured != expect || r.predicted != expect) {
                    out << "K_" << label_of(dims) << ": measured " << measured << ", predicted "
                        << r.predicted << ", expected " << expect;
                    return;
                }
            }
        }
        note << instances << " instances";
    });

    criterion("2. grid closed form, d<=3, n_i<=6", [](std::ostringstream& out, std::ostringstream& note) {
        int instances = 0;
        for (int d = 1; d <= 3; ++d) {
            for (const auto& dims : sorted_tuples(d, 6)) {
                ConstructionResult r = grid_optimal_tree(dims);
                int expect = 1;
                for (int i = 0; i + 1 < d; ++i) expect += 2 * (dims[i] / 2);
                int measured = max_stretch(r.graph, r.tree).value;
                ++instances;
                if (measured != expect || r.predicted != expect) {
                    out << "P_" << label_of(dims) << ": measured " << measured << ", predicted "
                        << r.predicted << ", expected " << expect;
                    return;
                }
            }
        }
        note << instances << " instances";
    });

    criterion("3. exact solver agrees with the closed forms", [](std::ostringstream& out, std::ostringstream&) {
        struct Case {
            ProductGraph g;
            int expect;
            std::string name;
        };
        std::vector<Case> cases;
        cases.push_back({hamming({3}), 2, "K_3"});
        cases.push_back({hamming({2, 2}), 3, "K_2xK_2"});
        cases.push_back({hamming({2, 3}), 3, "K_2xK_3"});
        cases.push_back({hamming({3, 3}), 4, "K_3xK_3"});
        cases.push_back({hamming({2, 2, 2}), 5, "Q_3"});
        cases.push_back({grid({2, 2}), 3, "P_2xP_2"});
        cases.push_back({grid({2, 3}), 3, "P_2xP_3"});
        cases.push_back({grid({3, 3}), 3, "P_3xP_3"});
        cases.push_back({grid({2, 2, 2}), 5, "P_2xP_2xP_2"});
        SolveBudget budget;
        for (const auto& c : cases) {
            SolveResult r = exact_tree_stretch(materialize(c.g), budget);
            if (!r.exhausted) {
                out << c.name << ": enumeration did not complete";
                return;
            }
            if (r.optimum != c.expect) {
                out << c.name << ": optimum " << r.optimum << ", expected " << c.expect;
                return;
            }
            if (max_stretch(c.g, r.optimal_tree).value != r.optimum) {
                out << c.name << ": optimal tree does not revalidate";
                return;
            }
        }
    });

    criterion("4. witness certificates on 100 random trees each", [](std::ostringstream& out, std::ostringstream&) {
        struct Case {
            ProductGraph g;
            int bound;
            std::string name;
        };
        std::vector<Case> cases;
        cases.push_back({hamming({2, 2, 2}), 5, "Q_3"});
        cases.push_back({hamming({3, 3}), 4, "K_3xK_3"});
        for (const auto& c : cases) {
            std::mt19937_64 rng(20250811);
            for (int i = 0; i < 100; ++i) {
                SpanningTree t = random_spanning_tree(c.g, rng);
                WitnessCertificate cert = hamming_witness(c.g, t);
                CheckResult check = check_certificate(c.g, t, cert);
                if (!check.ok) {
                    out << c.name << " tree " << i << ": certificate rejected (" << check.reason
                        << ")";
                    return;
                }
                if (cert.detour_length < c.bound) {
                    out << c.name << " tree " << i << ": detour " << cert.detour_length << " < "
                        << c.bound;
                    return;
                }
            }
        }
    });

    criterion("5. duality and incidence counts on 100 random trees each",
              [](std::ostringstream& out, std::ostringstream&) {
                  for (const auto& g : {hamming({4, 5}), grid({4, 5}), grid({3, 4, 4})}) {
                      std::mt19937_64 rng(424242);
                      for (int i = 0; i < 100; ++i) {
                          SpanningTree t = random_spanning_tree(g, rng);
                          if (!duality_check(g, t)) {
                              out << "duality violated on tree " << i;
                              return;
                          }
                          long long cuts = 0, cycles = 0;
                          for (Edge e : t.edges()) cuts += edge_congestion(g, t, e) - 1;
                          for_each_edge(g, [&](Edge e) {
                              if (t.contains_edge(e)) return;
                              cycles += t.distance(e.u, e.v);  // cycle length minus one
                          });
                          if (cuts != cycles) {
                              out << "incidence counts differ on tree " << i << ": " << cuts
                                  << " vs " << cycles;
                              return;
                          }
                      }
                  }
              });

    criterion("6. stretch bounded by tree diameter on the same corpus",
              [](std::ostringstream& out, std::ostringstream&) {
                  for (const auto& g : {hamming({4, 5}), grid({4, 5}), grid({3, 4, 4})}) {
                      std::mt19937_64 rng(424242);
                      for (int i = 0; i < 100; ++i) {
                          SpanningTree t = random_spanning_tree(g, rng);
                          int stretch = max_stretch(g, t).value;
                          int diameter = t.diameter();
                          if (stretch > diameter) {
                              out << "tree " << i << ": stretch " << stretch << " > diameter "
                                  << diameter;
                              return;
                          }
                      }
                  }
              });

    criterion("7. reference constructions match (stretch, diameter) + DOT exports",
              [](std::ostringstream& out, std::ostringstream& note) {
                  ConstructionResult k45 = hamming_optimal_tree({4, 5});
                  int s1 = max_stretch(k45.graph, k45.tree).value;
                  int d1 = k45.tree.diameter();
                  if (s1 != 4 || d1 != 4) {
                      out << "K_4xK_5: got (" << s1 << ", " << d1 << "), expected (4, 4)";
                      return;
                  }
                  ConstructionResult p45 = grid_optimal_tree({4, 5});
                  int s2 = max_stretch(p45.graph, p45.tree).value;
                  int d2 = p45.tree.diameter();
                  if (s2 != 5 || d2 < 5) {
                      out << "P_4xP_5: got (" << s2 << ", " << d2 << "), expected (5, >=5)";
                      return;
                  }
                  ConstructionResult p344 = grid_optimal_tree({3, 4, 4});
                  int s3 = max_stretch(p344.graph, p344.tree).value;
                  int d3 = p344.tree.diameter();
                  if (s3 != 7 || d3 < 7) {
                      out << "P_3xP_4xP_4: got (" << s3 << ", " << d3 << "), expected (7, >=7)";
                      return;
                  }
                  std::filesystem::create_directories("acceptance_dot");
                  std::ofstream("acceptance_dot/k4x5.dot") << to_dot(k45.graph, &k45.tree);
                  std::ofstream("acceptance_dot/p4x5.dot") << to_dot(p45.graph, &p45.tree);
                  std::ofstream("acceptance_dot/p3x4x4.dot") << to_dot(p344.graph, &p344.tree);
                  note << "DOT files in acceptance_dot/ for the manual topology check; "
                          "see README";
              });

    criterion("8. enumeration counts match the determinant oracle",
              [](std::ostringstream& out, std::ostringstream&) {
                  SolveBudget budget;
                  for (const auto& g : {hamming({2, 2}), hamming({4}), hamming({2, 3}),
                                        hamming({2, 2, 2})}) {
                      ExplicitGraph e = materialize(g);
                      auto stats = enumerate_spanning_trees(
                          e, budget, [](std::span<const Edge>) { return true; });
                      long long expect = test::kirchhoff_spanning_tree_count(e);
                      if (!stats.exhausted || stats.trees_enumerated != expect) {
                          out << "count " << stats.trees_enumerated << ", determinant " << expect;
                          return;
                      }
                  }
              });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
