#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptw/cpair.hpp"
#include "ptw/fc_matrix.hpp"
#include "ptw/json_io.hpp"
#include "ptw/oracle.hpp"

namespace {

using ptw::CongRelation;
using ptw::CPair;
using ptw::FCMatrix;
using ptw::Lattice;
using ptw::TwistedElement;
using ptw::TwistedTable;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

// Inline JSON if it parses, otherwise a path to a JSON file.
nlohmann::json arg_json(const std::string& arg) {
  try {
    return nlohmann::json::parse(arg);
  } catch (const nlohmann::json::parse_error&) {
    return load_json_file(arg);
  }
}

std::string grid_line(const FCMatrix& M) {
  std::ostringstream os;
  for (int q = M.n(); q >= 0; --q) {
    if (q != M.n()) os << " / ";
    for (int i = 0; i <= M.d(); ++i) {
      if (i) os << ' ';
      os << M.entry(q, i).token();
    }
  }
  return os.str();
}

void print_grid(const FCMatrix& M) {
  for (int q = M.n(); q >= 0; --q) {
    std::cout << "row " << q << ":";
    for (int i = 0; i <= M.d(); ++i) std::cout << ' ' << M.entry(q, i).token();
    std::cout << "\n";
  }
}

std::pair<CPair, bool> load_cpair(const std::string& path) {
  auto [P, exc] = ptw::io::cpair_from_json(arg_json(path));
  if (auto v = ptw::validate(P)) {
    std::ostringstream os;
    os << "invalid C-pair (" << path << "): row " << v->row << " col " << v->col
       << ": " << v->condition;
    throw std::invalid_argument(os.str());
  }
  if (exc && !ptw::is_exceptional(P))
    throw std::invalid_argument("C-pair is flagged exceptional but has no exceptional row");
  return {P, exc};
}

int run_enum(int n, int d) {
  std::vector<FCMatrix> all = ptw::enumerate_fc(n, d);
  for (std::size_t i = 0; i < all.size(); ++i)
    std::cout << i << "\t" << grid_line(all[i]) << "\n";
  std::cout << "total " << all.size() << "\n";
  return 0;
}

int run_lattice(int n, int d, const std::string& dot_path,
                const std::string& json_path, const std::string& labels) {
  Lattice L = ptw::build_lattice(n, d);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot write " + dot_path);
    out << ptw::lattice_to_dot(L, labels != "none");
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    out << ptw::io::lattice_to_json(L).dump(2) << "\n";
  }
  std::cout << "nodes " << L.nodes.size() << " edges " << L.hasse.size()
            << " rees " << L.rees.size() << "\n";
  return 0;
}

int run_count_table(int max_n, int max_d, bool no_timing) {
  std::cout << "n,d,count,seconds\n";
  for (int n = 1; n <= max_n; ++n)
    for (int d = 0; d <= max_d; ++d) {
      auto t0 = std::chrono::steady_clock::now();
      std::size_t count = ptw::enumerate_fc(n, d).size();
      auto t1 = std::chrono::steady_clock::now();
      double secs = std::chrono::duration<double>(t1 - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", no_timing ? 0.0 : secs);
      std::cout << n << "," << d << "," << count << "," << buf << "\n";
    }
  return 0;
}

bool refines(const CongRelation& fine, const CongRelation& coarse) {
  for (std::size_t x = 0; x < fine.class_id.size(); ++x)
    if (coarse.class_id[x] != coarse.class_id[fine.class_id[x]]) return false;
  return true;
}

int run_verify(int n, int d, const std::string& level) {
  std::vector<FCMatrix> all = ptw::enumerate_fc(n, d);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (auto v = ptw::validate_fc(all[i])) {
      std::cout << "FAIL: matrix " << i << " invalid: row " << v->row
                << " col " << v->col << ": " << v->condition << "\n";
      return 1;
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) {
        std::cout << "FAIL: duplicate matrices " << i << " and " << j << "\n";
        return 1;
      }
  std::size_t count = all.size();
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      leq[i][j] = ptw::includes_fc(all[i], all[j]);
  for (std::size_t i = 0; i < count; ++i) {
    if (!leq[i][i]) {
      std::cout << "FAIL: containment not reflexive at " << i << "\n";
      return 1;
    }
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) {
        std::cout << "FAIL: containment not antisymmetric at " << i << "," << j << "\n";
        return 1;
      }
      for (std::size_t k = 0; k < count; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) {
          std::cout << "FAIL: containment not transitive at " << i << "," << j
                    << "," << k << "\n";
          return 1;
        }
    }
  }
  if (level == "exhaustive") {
    std::size_t nparts = ptw::enumerate_partitions(n).size();
    std::size_t size = (d + 1) * nparts + 1;
    if (size > 64) {
      std::cout << "FAIL: exhaustive level accepts tables of at most 64 elements, got "
                << size << "\n";
      return 1;
    }
    TwistedTable t = ptw::build_monoid(n, d);
    std::vector<CongRelation> oracle = ptw::all_congruences(t.monoid);
    std::vector<CongRelation> coded;
    for (const FCMatrix& M : all) coded.push_back(ptw::relation_of_matrix(t, M));
    std::vector<CongRelation> sorted = coded;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != oracle) {
      std::cout << "FAIL: coded congruences do not match the oracle set ("
                << coded.size() << " vs " << oracle.size() << ")\n";
      return 1;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (ptw::classify(t, coded[i]) != all[i]) {
        std::cout << "FAIL: classification round trip broke at matrix " << i << "\n";
        return 1;
      }
      for (std::size_t j = 0; j < count; ++j)
        if (leq[i][j] != refines(coded[i], coded[j])) {
          std::cout << "FAIL: containment disagrees with refinement at " << i
                    << "," << j << "\n";
          return 1;
        }
    }
  }
  std::cout << "ok: " << count << " matrices, level " << level << "\n";
  return 0;
}

int run_member(const std::string& cpair_path, const std::string& a_arg,
               const std::string& b_arg, bool force_exceptional) {
  auto [P, exc] = load_cpair(cpair_path);
  TwistedElement a = ptw::io::element_from_json(arg_json(a_arg));
  TwistedElement b = ptw::io::element_from_json(arg_json(b_arg));
  bool twisted = exc || force_exceptional;
  bool related = twisted ? ptw::cgx_member(P, a, b) : ptw::cg_member(P, a, b);
  std::cout << "related: " << (related ? "true" : "false") << "\n";
  return 0;
}

int run_compare(const std::string& first_path, const std::string& second_path) {
  auto [P1, e1] = load_cpair(first_path);
  auto [P2, e2] = load_cpair(second_path);
  bool fwd = ptw::includes(P1, e1, P2, e2);
  bool bwd = ptw::includes(P2, e2, P1, e1);
  std::cout << "first_in_second: " << (fwd ? "true" : "false") << "\n";
  std::cout << "second_in_first: " << (bwd ? "true" : "false") << "\n";
  return 0;
}

int run_classify(int n, int d, const std::string& relation_path) {
  TwistedTable t = ptw::build_monoid(n, d);
  CongRelation r =
      ptw::io::relation_from_json(arg_json(relation_path), t.monoid.size);
  FCMatrix M = ptw::classify(t, r);
  std::cout << "n " << n << " d " << d << "\n";
  print_grid(M);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruences of twisted partition monoids"};
  app.require_subcommand(1);
  std::function<int()> action;

  int n = 1, d = 0;
  auto* cmd_enum = app.add_subcommand("enum", "list the congruence matrices of Ptw(n,d)");
  cmd_enum->add_option("--n", n, "degree")->required();
  cmd_enum->add_option("--d", d, "twist bound")->required();
  cmd_enum->callback([&] { action = [&] { return run_enum(n, d); }; });

  std::string dot_path, json_path, labels = "grid";
  auto* cmd_lat = app.add_subcommand("lattice", "build the congruence lattice of Ptw(n,d)");
  cmd_lat->add_option("--n", n, "degree")->required();
  cmd_lat->add_option("--d", d, "twist bound")->required();
  cmd_lat->add_option("--dot", dot_path, "write a Graphviz file");
  cmd_lat->add_option("--json", json_path, "write a JSON file");
  cmd_lat->add_option("--labels", labels, "node labels: grid|none")
      ->check(CLI::IsMember({"grid", "none"}));
  cmd_lat->callback(
      [&] { action = [&] { return run_lattice(n, d, dot_path, json_path, labels); }; });

  int max_n = 3, max_d = 4;
  bool no_timing = false;
  auto* cmd_count = app.add_subcommand("count-table", "CSV of matrix counts");
  cmd_count->add_option("--max-n", max_n, "largest degree");
  cmd_count->add_option("--max-d", max_d, "largest twist bound");
  cmd_count->add_flag("--no-timing", no_timing, "print 0.000 in the seconds column");
  cmd_count->callback(
      [&] { action = [&] { return run_count_table(max_n, max_d, no_timing); }; });

  std::string level = "quick";
  auto* cmd_verify = app.add_subcommand("verify", "check the coded congruences of Ptw(n,d)");
  cmd_verify->add_option("--n", n, "degree")->required();
  cmd_verify->add_option("--d", d, "twist bound")->required();
  cmd_verify->add_option("--level", level, "quick|exhaustive")
      ->check(CLI::IsMember({"quick", "exhaustive"}));
  cmd_verify->callback([&] { action = [&] { return run_verify(n, d, level); }; });

  std::string cpair_path, elem_a, elem_b;
  bool force_exc = false;
  auto* cmd_member = app.add_subcommand("member", "test one pair against a coded congruence");
  cmd_member->add_option("cpair", cpair_path, "C-pair JSON (file or inline)")->required();
  cmd_member->add_option("a", elem_a, "first element JSON")->required();
  cmd_member->add_option("b", elem_b, "second element JSON")->required();
  cmd_member->add_flag("--exceptional", force_exc, "use the twisted variant");
  cmd_member->callback(
      [&] { action = [&] { return run_member(cpair_path, elem_a, elem_b, force_exc); }; });

  std::string first_path, second_path;
  auto* cmd_cmp = app.add_subcommand("compare", "containment between two coded congruences");
  cmd_cmp->add_option("first", first_path, "C-pair JSON (file or inline)")->required();
  cmd_cmp->add_option("second", second_path, "C-pair JSON (file or inline)")->required();
  cmd_cmp->callback([&] { action = [&] { return run_compare(first_path, second_path); }; });

  std::string relation_path;
  auto* cmd_cls = app.add_subcommand("classify", "name the matrix of a relation on Ptw(n,d)");
  cmd_cls->add_option("--n", n, "degree")->required();
  cmd_cls->add_option("--d", d, "twist bound")->required();
  cmd_cls->add_option("relation", relation_path, "relation JSON (file or inline)")->required();
  cmd_cls->callback(
      [&] { action = [&] { return run_classify(n, d, relation_path); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
