// Command line front end.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "symplectica/crystal.hpp"
#include "symplectica/global_basis.hpp"
#include "symplectica/io.hpp"
#include "symplectica/weyl.hpp"

using namespace symplectica;
namespace fs = std::filesystem;

namespace {

struct UserError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void write_atomically(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UserError("cannot write " + path.string());
    out << content;
  }
  fs::rename(tmp, path);
}

Shape read_shape(const std::string& text, int n) {
  Shape s = parse_shape(text);
  if (s.rank() != n) throw UserError("lambda must have " + std::to_string(n) + " coefficients");
  return s;
}

std::string annotate(const Column& c, int n) {
  auto adm = admissibility(c, n);
  std::string out = to_string(c);
  if (!adm) return out;
  auto list = [](const std::vector<Letter>& v) {
    std::string s;
    for (Letter x : v) s += (s.empty() ? "" : ",") + to_string(x);
    return s.empty() ? std::string("-") : s;
  };
  return out + "  K=" + list(adm->k_letters) + "  L=" + list(adm->l_letters);
}

std::string expansion_text(const Column& c, const WVector& g) {
  std::string out = "G(" + to_string(c) + ")\n";
  for (const auto& [t, coeff] : g.entries()) out += "  " + to_string(coeff) + "\t" + to_string(t.columns.at(0)) + "\n";
  return out;
}

std::string weight_file_name(const Weight& w, Format f) {
  std::string name = "weight";
  for (int c : w.content) name += "_" + std::to_string(c);
  switch (f) {
    case Format::json:
      return name + ".json";
    case Format::csv:
      return name + ".csv";
    case Format::latex:
      return name + ".tex";
    case Format::text:
      return name + ".txt";
  }
  return name;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("SYMPLECTICA_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UserError("SYMPLECTICA_JOBS must be a positive integer");
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases of U_q(sp_2n)-modules via symplectic tableaux"};
  app.require_subcommand(1);

  int n = 0;
  int height = 0;
  bool admissible = false, count = false;
  auto* columns = app.add_subcommand("columns", "list columns of C_n of a given height");
  columns->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  columns->add_option("-H,--height", height, "column height")->required();
  columns->add_flag("--admissible", admissible, "admissible columns only, with K_C and L_C");
  columns->add_flag("--count", count, "print the count only");

  std::string column_text, format_text = "text";
  int p = 0;
  bool verify = false;
  auto* gfund = app.add_subcommand("gfund", "G(C) in W(Lambda_p), closed form");
  gfund->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  gfund->add_option("-p,--height", p, "column height (all admissible columns of this height)");
  gfund->add_option("-c,--column", column_text, "column, e.g. 3,5,6,6b,5b,3b");
  gfund->add_option("--format", format_text, "text or json")->check(CLI::IsMember({"text", "json"}));
  gfund->add_flag("--verify", verify, "compare with the Marsh monomial route");

  std::string lambda_text, weight_text, weight_of_text, out_path;
  bool all_weights = false, paper_order = false, all_rows = false, check = false;
  unsigned jobs = 0;
  auto* gbasis = app.add_subcommand("gbasis", "canonical basis of weight spaces of V(lambda)");
  gbasis->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  gbasis->add_option("-l,--lambda", lambda_text, "Lambda-coefficients, e.g. 1,1,2")->required();
  auto* wopt = gbasis->add_option("--weight", weight_text, "content vector c_i = #i - #ibar");
  auto* wofopt = gbasis->add_option("--weight-of", weight_of_text, "weight of this tableau, e.g. 1,3,2b|1,3b|2b");
  auto* allopt = gbasis->add_flag("--all", all_weights, "every weight class");
  wopt->excludes(wofopt)->excludes(allopt);
  wofopt->excludes(allopt);
  gbasis->add_option("--format", format_text, "json, csv, latex or text")->check(CLI::IsMember({"json", "csv", "latex", "text"}));
  gbasis->add_flag("--paper-order", paper_order, "rows and columns descending");
  gbasis->add_flag("--all-rows", all_rows, "list every tabloid of the weight as a row");
  gbasis->add_flag("--verify", check, "check unitriangularity, positivity and bar invariance");
  gbasis->add_option("--jobs", jobs, "worker threads (default $SYMPLECTICA_JOBS or 1)")->check(CLI::PositiveNumber);
  gbasis->add_option("-o,--output", out_path, "output file (one class) or directory (several)");

  auto* dim = app.add_subcommand("dim", "|ST(n, lambda)| and the Weyl dimension");
  dim->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  dim->add_option("-l,--lambda", lambda_text, "Lambda-coefficients")->required();

  int n_max = 3;
  bool inject = false;
  auto* verify_cmd = app.add_subcommand("verify", "relations and crystal compatibility on every W(Lambda_p)");
  verify_cmd->add_option("n_max", n_max, "largest rank")->check(CLI::Range(2, 8));
  verify_cmd->add_flag("--inject-fault", inject, "perturb one action coefficient");

  auto* crystal = app.add_subcommand("crystal", "crystal graph of B(lambda) in Graphviz dot");
  crystal->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  crystal->add_option("-l,--lambda", lambda_text, "Lambda-coefficients")->required();

  std::string tableau_text;
  bool show_vector = false;
  auto* monomial = app.add_subcommand("monomial", "the word of A(T)");
  monomial->add_option("-n,--rank", n, "rank n")->required()->check(CLI::Range(1, 16));
  monomial->add_option("-t,--tableau", tableau_text, "tableau, e.g. 2,3,3b|2,3b|3")->required();
  monomial->add_flag("--vector", show_vector, "also print A(T) on tabloids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*columns) {
      if (height < 1 || height > 2 * n) throw UserError("height must lie in 1.." + std::to_string(2 * n));
      auto cols = enumerate_columns(n, height, admissible);
      if (count) {
        std::cout << cols.size() << '\n';
      } else {
        for (const auto& c : cols) std::cout << (admissible ? annotate(c, n) : to_string(c)) << '\n';
      }
      return 0;
    }

    if (*gfund) {
      std::vector<Column> cols;
      if (!column_text.empty()) {
        Column c = parse_column(column_text);
        if (!c.valid_for(n)) throw UserError("column " + to_string(c) + " has letters outside C_" + std::to_string(n));
        if (!is_admissible(c, n)) {
          std::string why = "column " + to_string(c) + " is not admissible";
          for (int h = 1; h <= c.height(); ++h) {
            int small = 0;
            for (Letter x : c.letters()) small += x.index() <= h;
            if (small > h) {
              why += ": it holds " + std::to_string(small) + " letters x or xbar with x <= " + std::to_string(h);
              break;
            }
          }
          throw UserError(why);
        }
        cols.push_back(c);
      } else {
        for (int h = 1; h <= n; ++h) {
          if (p != 0 && h != p) continue;
          auto more = enumerate_columns(n, h, true);
          cols.insert(cols.end(), more.begin(), more.end());
        }
      }
      std::size_t mismatches = 0;
      json all = json::array();
      for (const auto& c : cols) {
        WVector g = g_fundamental_closed(c, n);
        if (verify && g_fundamental_monomial(c, n) != g) {
          ++mismatches;
          std::cerr << "mismatch at " << to_string(c) << '\n';
        }
        if (format_text == "json") {
          all.push_back({{"column", to_json(Tabloid(std::vector<Column>{c}))[0]}, {"g", to_json(g)}});
        } else if (!verify || cols.size() == 1) {
          std::cout << expansion_text(c, g);
        }
      }
      if (format_text == "json") std::cout << all.dump(1) << '\n';
      if (verify) {
        std::cout << (mismatches ? std::to_string(mismatches) + " of " + std::to_string(cols.size()) + " differ"
                                 : "all equal (" + std::to_string(cols.size()) + " columns)")
                  << '\n';
        return mismatches ? 2 : 0;
      }
      return 0;
    }

    if (*gbasis) {
      Shape shape = read_shape(lambda_text, n);
      if (shape.columns() == 0) throw UserError("lambda must be nonzero");
      if (jobs == 0) jobs = default_jobs();
      Format fmt = parse_format(format_text);
      std::vector<Weight> classes;
      if (!weight_text.empty()) {
        Weight w = parse_weight(weight_text);
        if (w.rank() != n) throw UserError("weight must have " + std::to_string(n) + " entries");
        classes.push_back(w);
      } else if (!weight_of_text.empty()) {
        Tabloid t = parse_tabloid(weight_of_text);
        if (!t.has_shape(shape)) throw UserError("tableau " + to_string(t) + " does not have the shape of lambda");
        classes.push_back(weight(t, n));
      } else {
        classes = weight_classes(shape);
      }

      std::vector<std::string> texts(classes.size());
      const unsigned outer = std::min<unsigned>(jobs, static_cast<unsigned>(classes.size()));
      const unsigned inner = classes.size() == 1 ? jobs : 1;
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex mu;
      auto work = [&] {
        for (std::size_t k; (k = next++) < classes.size();) {
          try {
            auto b = canonical_basis(shape, classes[k], BasisOptions{inner, all_rows});
            if (b.matrix.columns.empty()) {
              std::lock_guard lock(mu);
              std::cerr << "warning: no symplectic tableau has weight " << to_string(classes[k]) << '\n';
            }
            if (check) {
              auto report = check_properties(b);
              if (!report.ok) throw InternalError("weight " + to_string(classes[k]) + ": " + report.detail);
              std::lock_guard lock(mu);
              std::cerr << "weight " << to_string(classes[k]) << ": " << report.checks << " checks passed\n";
            }
            BasisMatrix m = paper_order ? b.matrix.reversed() : b.matrix;
            texts[k] = emit(m, fmt);
            if (!out_path.empty() && classes.size() > 1) {
              write_atomically(fs::path(out_path) / weight_file_name(classes[k], fmt), texts[k]);
            }
          } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
            next = classes.size();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned j = 1; j < outer; ++j) pool.emplace_back(work);
      work();
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);

      if (out_path.empty()) {
        for (const auto& t : texts) std::cout << t;
      } else if (classes.size() == 1) {
        write_atomically(out_path, texts[0]);
      }
      return 0;
    }

    if (*dim) {
      Shape shape = read_shape(lambda_text, n);
      auto count_st = enumerate_tabloids(shape, std::nullopt, true).size();
      auto weyl = weyl_dimension(shape.lambda);
      std::cout << count_st << ' ' << weyl << '\n';
      if (weyl != count_st) {
        std::cerr << "dimension mismatch: " << count_st << " tableaux, Weyl formula " << weyl << '\n';
        return 2;
      }
      return 0;
    }

    if (*verify_cmd) {
      ColumnActions actions;
      if (inject) {
        actions.f = [](ColumnMask c, int i, int rank) {
          auto img = act_f_column(c, i, rank);
          for (auto& t : img.terms) {
            if (t.q_exponent == -1) t.q_exponent = 1;
          }
          return img;
        };
      }
      bool ok = true;
      for (int rank = 1; rank <= n_max; ++rank) {
        for (int h = 1; h <= rank; ++h) {
          auto r = verify_defining_relations(rank, h, actions);
          std::cout << "relations  n=" << rank << " p=" << h << "  " << r.checks << " checks  "
                    << (r.ok ? "ok" : "FAIL") << '\n';
          if (!r.ok) {
            ok = false;
            std::cout << "  violated: " << r.relation << r.detail << " on column "
                      << (r.witness ? to_string(*r.witness) : std::string("?")) << '\n';
          }
          if (inject) continue;
          auto c = verify_crystal_compatibility(rank, h);
          std::cout << "crystal    n=" << rank << " p=" << h << "  " << c.checks << " checks  "
                    << (c.ok ? "ok" : "FAIL") << '\n';
          if (!c.ok) {
            ok = false;
            std::cout << "  " << c.detail << '\n';
          }
        }
      }
      return ok ? 0 : 2;
    }

    if (*crystal) {
      Shape shape = read_shape(lambda_text, n);
      std::cout << to_dot(connected_component(reading(highest_tableau(shape)), n));
      return 0;
    }

    if (*monomial) {
      Tabloid t = parse_tabloid(tableau_text);
      auto w = a_monomial_word(t, n);
      std::cout << to_string(w) << '\n';
      if (show_vector) {
        for (const auto& [tau, c] : a_vector(t, n).entries()) std::cout << "  " << to_string(c) << '\t' << to_string(tau) << '\n';
      }
      return 0;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const InexactDivision& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
