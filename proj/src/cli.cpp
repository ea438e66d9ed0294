#include "actsep/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "actsep/families.hpp"
#include "actsep/rees.hpp"
#include "actsep/separability.hpp"
#include "actsep/text_io.hpp"

namespace actsep {

  namespace {
    namespace fs = std::filesystem;

    std::string slurp(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // First keyword of a text file, skipping comments and blank lines.
    std::string first_keyword(std::string const& text) {
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) {
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::string        w;
        if (words >> w) {
          return w;
        }
      }
      return "";
    }

    NamedMonoid load_monoid(std::string const& path) {
      std::istringstream in(slurp(path));
      return parse_monoid(in);
    }

    NamedAct load_act(std::string const& act_path, std::string const& monoid_path) {
      NamedMonoid const  m = load_monoid(monoid_path);
      std::istringstream in(slurp(act_path));
      return parse_act(in, m);
    }

    std::vector<Index> parse_list(std::string const& s) {
      std::vector<Index> out;
      std::stringstream  ss(s);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
          throw ParamOutOfRange("bad index list '" + s + "'");
        }
        out.push_back(std::stoull(item));
      }
      if (out.empty()) {
        throw ParamOutOfRange("empty index list");
      }
      return out;
    }

    void require_index(Index x, std::size_t size, std::string const& what) {
      if (x >= size) {
        throw ParamOutOfRange(what + " " + std::to_string(x) + " out of range");
      }
    }

    // Reads whitespace-separated integers, ignoring comments.
    std::vector<Index> read_numbers(std::string const& path) {
      std::istringstream in(slurp(path));
      std::vector<Index> out;
      std::size_t        number = 0;
      for (std::string line; std::getline(in, line);) {
        ++number;
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        for (std::string w; words >> w;) {
          if (w.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("expected an element index, got '" + w + "'", number);
          }
          out.push_back(std::stoull(w));
        }
      }
      return out;
    }

    Params parse_params(std::vector<std::string> const& items) {
      Params out;
      for (auto const& item : items) {
        auto const eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw ParamOutOfRange("parameter must look like k=v: '" + item + "'");
        }
        std::string const key = item.substr(0, eq), value = item.substr(eq + 1);
        try {
          std::size_t used = 0;
          long const  v    = std::stol(value, &used);
          if (used != value.size()) {
            throw std::invalid_argument(value);
          }
          out[key] = v;
        } catch (std::logic_error const&) {
          throw ParamOutOfRange("parameter " + key + " needs an integer value");
        }
      }
      return out;
    }

    void write_file(fs::path const& path, std::string const& text) {
      std::ofstream out(path);
      if (!out) {
        throw ParamOutOfRange("cannot write '" + path.string() + "'");
      }
      out << text;
    }

    std::string golden_text(FamilyInstance const&          inst,
                            std::vector<FactResult> const& results) {
      std::string text = "family " + inst.id() + "\n";
      for (auto const& r : results) {
        text += r.line + "\n";
      }
      return text;
    }

    // Subcommand handlers ///////////////////////////////////////////////////

    int validate_files(std::string const& monoid_path,
                       std::string const& act_path,
                       std::string const& monoid_file,
                       std::ostream&      out) {
      if (!act_path.empty()) {
        if (monoid_file.empty()) {
          throw ParamOutOfRange("validate --act needs --monoid-file");
        }
        std::string const mtext = slurp(monoid_file);
        std::string const atext = slurp(act_path);
        std::istringstream min(mtext), ain(atext);
        if (first_keyword(atext) == "partialact") {
          auto m = parse_partial_monoid(min);
          auto a = parse_partial_act(ain, m);
          out << "valid partialact " << a.name << " size " << a.act->size() << '\n';
        } else {
          auto m = parse_monoid(min);
          auto a = parse_act(ain, m);
          out << "valid act " << a.name << " size " << a.act->size() << '\n';
        }
        return exit_ok;
      }
      std::string const  text = slurp(monoid_path);
      std::istringstream in(text);
      if (first_keyword(text) == "partialmonoid") {
        auto m = parse_partial_monoid(in);
        out << "valid partialmonoid " << m.name << " order " << m.monoid->order()
            << '\n';
      } else {
        auto m = parse_monoid(in);
        out << "valid monoid " << m.name << " order " << m.monoid->order() << '\n';
      }
      return exit_ok;
    }

    // Axiom failures are a negative verdict here; syntax errors still exit 3.
    int do_validate(std::string const& monoid_path,
                    std::string const& act_path,
                    std::string const& monoid_file,
                    std::ostream&      out) {
      try {
        return validate_files(monoid_path, act_path, monoid_file, out);
      } catch (ParseError const&) {
        throw;
      } catch (ValidationError const& e) {
        out << "invalid: " << e.what() << '\n';
        return exit_negative;
      }
    }

    int do_check(std::string const&         act_path,
                 std::string const&         monoid_file,
                 std::string const&         condition,
                 bool                       json,
                 std::string const&         cert_dir,
                 std::optional<std::size_t> max_index,
                 std::ostream&              out) {
      Condition const c = parse_condition(condition);
      NamedAct const  a = load_act(act_path, monoid_file);
      auto const      report = check_condition(a.act, c, max_index);
      if (json) {
        out << report_json(a.name, report) << '\n';
      } else {
        write_report(out, a.name, report);
      }
      if (!cert_dir.empty()) {
        fs::create_directories(cert_dir);
        for (std::size_t k = 0; k < report.instances.size(); ++k) {
          auto const& inst = report.instances[k];
          if (inst.certificate) {
            std::ostringstream text;
            write_certificate(text, a.name, *inst.certificate);
            write_file(fs::path(cert_dir) / ("cert_" + std::to_string(k) + ".txt"),
                       text.str());
          }
        }
      }
      return report.holds ? exit_ok : exit_negative;
    }

    int do_separate(std::string const&         act_path,
                    std::string const&         monoid_file,
                    Index                      element,
                    std::string const&         from,
                    std::optional<std::size_t> max_index,
                    std::string const&         out_path,
                    bool                       index_only,
                    std::ostream&              out) {
      NamedAct const           a = load_act(act_path, monoid_file);
      std::vector<Index> const x = parse_list(from);
      require_index(element, a.act->size(), "element");
      for (Index y : x) {
        require_index(y, a.act->size(), "element");
      }
      auto const cert = separate(a.act, element, x, max_index);
      if (!cert) {
        out << "none within bound\n";
        return exit_negative;
      }
      if (index_only) {
        out << cert->quotient_size() << '\n';
        return exit_ok;
      }
      std::ostringstream text;
      write_certificate(text, a.name, *cert);
      if (out_path.empty()) {
        out << text.str();
      } else {
        write_file(out_path, text.str());
      }
      return exit_ok;
    }

    int do_rees(std::string const& group_path,
                std::size_t        rows,
                std::size_t        cols,
                std::string const& matrix_path,
                std::string const& normalize,
                bool               rank,
                std::string const& subgroup_path,
                std::ostream&      out) {
      ReesMatrixSpec spec;
      spec.group = load_monoid(group_path).monoid;
      spec.rows  = rows;
      spec.cols  = cols;
      auto const entries = read_numbers(matrix_path);
      if (entries.size() != rows * cols) {
        throw ParseError("matrix needs " + std::to_string(rows * cols)
                             + " entries, found " + std::to_string(entries.size()),
                         0);
      }
      spec.sandwich.assign(cols, std::vector<Index>(rows));
      for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
          spec.sandwich[j][i] = entries[j * rows + i];
        }
      }
      spec.validate();
      if (!normalize.empty()) {
        auto const anchors = parse_list(normalize);
        if (anchors.size() != 2) {
          throw ParamOutOfRange("--normalize takes i0,j0");
        }
        require_index(anchors[0], rows, "row");
        require_index(anchors[1], cols, "column");
        spec = normalize_sandwich(spec, anchors[0], anchors[1]);
        out << "matrix\n";
        for (auto const& row : spec.sandwich) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? " " : "") << row[i];
          }
          out << '\n';
        }
      }
      if (rank) {
        std::optional<ElementSet> n;
        if (!subgroup_path.empty()) {
          n = normalize_set(read_numbers(subgroup_path));
        }
        auto const r = sandwich_rank(spec, n);
        out << "r_I=" << r.r_I << " r_J=" << r.r_J << " rank=" << r.rank << '\n';
      }
      if (normalize.empty() && !rank) {
        write_monoid(out, "rees", *rees_matrix_monoid(spec));
      }
      return exit_ok;
    }

    int do_family_run(std::string const&              name,
                      std::vector<std::string> const& params,
                      std::string const&              golden_dir,
                      std::string const&              write_dir,
                      std::ostream&                   out,
                      std::ostream&                   err) {
      FamilyInstance const inst    = build_family(name, parse_params(params));
      auto const           results = verify_family(inst);
      std::string const    text    = golden_text(inst, results);
      out << text;
      bool ok = std::all_of(
          results.begin(), results.end(), [](auto const& r) { return r.pass; });
      if (!write_dir.empty()) {
        fs::create_directories(write_dir);
        write_file(fs::path(write_dir) / (inst.id() + ".facts"), text);
      }
      if (!golden_dir.empty()) {
        fs::path const path = fs::path(golden_dir) / (inst.id() + ".facts");
        std::string const golden = slurp(path.string());
        if (golden != text) {
          err << "output differs from " << path.string() << '\n';
          ok = false;
        } else {
          out << "golden match\n";
        }
      }
      return ok ? exit_ok : exit_negative;
    }

    int do_family_dump(std::string const&              name,
                       std::vector<std::string> const& params,
                       std::string const&              dir,
                       std::ostream&                   out) {
      FamilyInstance const inst = build_family(name, parse_params(params));
      std::string const    id   = inst.id();
      fs::create_directories(dir);
      std::ostringstream monoid_text, act_text;
      if (inst.monoid) {
        write_monoid(monoid_text, id, *inst.monoid);
        write_act(act_text, id, id, *inst.act);
      } else {
        write_partial_monoid(monoid_text, id, *inst.partial_monoid);
        write_partial_act(act_text, id, id, *inst.partial_act);
      }
      std::vector<fs::path> written{fs::path(dir) / (id + ".monoid"),
                                    fs::path(dir) / (id + ".act")};
      write_file(written[0], monoid_text.str());
      write_file(written[1], act_text.str());
      if (inst.rees) {
        std::ostringstream group, matrix;
        write_monoid(group, id + "_group", *inst.rees->group);
        for (auto const& row : inst.rees->sandwich) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            matrix << (i ? " " : "") << row[i];
          }
          matrix << '\n';
        }
        written.push_back(fs::path(dir) / (id + ".group"));
        written.push_back(fs::path(dir) / (id + ".matrix"));
        write_file(written[2], group.str());
        write_file(written[3], matrix.str());
      }
      for (auto const& p : written) {
        out << p.string() << '\n';
      }
      return exit_ok;
    }

    int do_family_list(std::ostream& out) {
      for (auto const& f : family_list()) {
        out << f.name;
        for (auto const& [p, def, lo, hi] : f.params) {
          out << ' ' << p << '=' << def << '[' << lo << ".." << hi << ']';
        }
        out << "  # " << f.summary << '\n';
      }
      return exit_ok;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separability checks for finite monoid acts", "actsep"};
    app.require_subcommand(1);

    std::string monoid_path, act_path, monoid_file, condition, cert_dir, from,
        out_path, group_path, matrix_path, normalize, subgroup_path, family_name,
        golden_dir, write_dir, dump_dir;
    bool                     json = false, rank = false;
    Index                    element = 0;
    std::size_t              max_index = 0, rows = 0, cols = 0;
    std::vector<std::string> params;

    auto* validate = app.add_subcommand("validate", "check monoid or act axioms");
    auto* vm       = validate->add_option("--monoid", monoid_path, "monoid file");
    auto* va       = validate->add_option("--act", act_path, "act file");
    validate->add_option("--monoid-file", monoid_file, "monoid of the act");
    vm->excludes(va);
    validate->require_option(1, 2);

    auto add_act_options = [&](CLI::App* sub) {
      sub->add_option("--act", act_path, "act file")->required();
      sub->add_option("--monoid-file", monoid_file, "monoid file")->required();
    };

    auto* check = app.add_subcommand("check", "check a separability condition");
    add_act_options(check);
    check->add_option("--condition", condition, "rf, wss, sss or cs")
        ->required()
        ->check(CLI::IsMember({"rf", "wss", "sss", "cs"}, CLI::ignore_case));
    check->add_flag("--json", json, "JSON output");
    check->add_option("--certificates", cert_dir, "write certificates here");
    auto* check_max = check->add_option("--max-index", max_index, "largest index")
                          ->check(CLI::PositiveNumber);

    auto* sep = app.add_subcommand("separate", "least-index separating congruence");
    add_act_options(sep);
    sep->add_option("--element", element, "element to separate")->required();
    sep->add_option("--from", from, "comma-separated elements")->required();
    auto* sep_max = sep->add_option("--max-index", max_index, "largest index")
                        ->check(CLI::PositiveNumber);
    sep->add_option("--out", out_path, "certificate file");

    auto* mi = app.add_subcommand("min-index", "least separating index");
    add_act_options(mi);
    mi->add_option("--element", element, "element to separate")->required();
    mi->add_option("--from", from, "comma-separated elements")->required();

    auto* rees = app.add_subcommand("rees", "Rees matrix monoids and sandwich rank");
    rees->add_option("--group", group_path, "group as a monoid file")->required();
    rees->add_option("--rows", rows, "|I|")->required()->check(CLI::PositiveNumber);
    rees->add_option("--cols", cols, "|J|")->required()->check(CLI::PositiveNumber);
    rees->add_option("--matrix", matrix_path, "|J| lines of |I| group elements")
        ->required();
    rees->add_option("--normalize", normalize, "anchors i0,j0");
    rees->add_flag("--rank", rank, "print the sandwich rank");
    rees->add_option("--mod-subgroup", subgroup_path, "normal subgroup elements");

    auto* family = app.add_subcommand("family", "worked example families");
    family->require_subcommand(1);
    auto* frun = family->add_subcommand("run", "build, verify, compare");
    frun->add_option("--name", family_name, "family name")->required();
    frun->add_option("--param", params, "k=v")->allow_extra_args(false);
    frun->add_option("--golden", golden_dir, "directory of golden fact files");
    frun->add_option("--write-golden", write_dir, "write the fact file here");
    auto* flist = family->add_subcommand("list", "list families");
    auto* fdump = family->add_subcommand("dump", "write monoid and act files");
    fdump->add_option("--name", family_name, "family name")->required();
    fdump->add_option("--param", params, "k=v")->allow_extra_args(false);
    fdump->add_option("--out", dump_dir, "output directory")->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      if (validate->parsed()) {
        if (monoid_path.empty() && act_path.empty()) {
          throw ParamOutOfRange("validate needs --monoid or --act");
        }
        return do_validate(monoid_path, act_path, monoid_file, out);
      }
      if (check->parsed()) {
        std::optional<std::size_t> bound;
        if (check_max->count()) {
          bound = max_index;
        }
        return do_check(act_path, monoid_file, condition, json, cert_dir, bound, out);
      }
      if (sep->parsed()) {
        std::optional<std::size_t> bound;
        if (sep_max->count()) {
          bound = max_index;
        }
        return do_separate(
            act_path, monoid_file, element, from, bound, out_path, false, out);
      }
      if (mi->parsed()) {
        return do_separate(
            act_path, monoid_file, element, from, std::nullopt, "", true, out);
      }
      if (rees->parsed()) {
        return do_rees(
            group_path, rows, cols, matrix_path, normalize, rank, subgroup_path, out);
      }
      if (frun->parsed()) {
        return do_family_run(family_name, params, golden_dir, write_dir, out, err);
      }
      if (flist->parsed()) {
        return do_family_list(out);
      }
      if (fdump->parsed()) {
        return do_family_dump(family_name, params, dump_dir, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      switch (e.category()) {
        case Error::Category::usage: return exit_usage;
        case Error::Category::validation: return exit_invalid;
        case Error::Category::search_cap: return exit_search_cap;
        case Error::Category::internal: return exit_internal;
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_internal;
    }
    return exit_usage;
  }

}  // namespace actsep
