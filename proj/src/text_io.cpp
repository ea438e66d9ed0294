#include "actsep/text_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace actsep {

  namespace {
    struct Line {
      std::size_t              number = 0;
      std::vector<std::string> words;
    };

    class Reader {
     public:
      explicit Reader(std::istream& in) : _in(in) {}

      // Next non-empty line, or nothing at end of input.
      bool next(Line& line) {
        std::string raw;
        while (std::getline(_in, raw)) {
          ++_number;
          if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
          }
          std::istringstream ss(raw);
          std::vector<std::string> words;
          for (std::string w; ss >> w;) {
            words.push_back(w);
          }
          if (!words.empty()) {
            line = {_number, std::move(words)};
            return true;
          }
        }
        return false;
      }

      Line expect(std::string const& what) {
        Line line;
        if (!next(line)) {
          throw ParseError("unexpected end of input, expected " + what, _number);
        }
        return line;
      }

      std::size_t number() const {
        return _number;
      }

     private:
      std::istream& _in;
      std::size_t   _number = 0;
    };

    std::size_t parse_index(std::string const& w, std::size_t line) {
      if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos
          || w.size() > 18) {
        throw ParseError("expected a non-negative integer, got '" + w + "'", line);
      }
      return std::stoull(w);
    }

    Index parse_entry(std::string const& w, std::size_t line, bool partial) {
      if (partial && w == "-") {
        return undefined;
      }
      return parse_index(w, line);
    }

    // "<keyword> <value>"
    std::string keyword_value(Reader& r, std::string const& keyword) {
      Line line = r.expect("'" + keyword + "'");
      if (line.words.size() != 2 || line.words[0] != keyword) {
        throw ParseError("expected '" + keyword + " <value>'", line.number);
      }
      return line.words[1];
    }

    std::size_t keyword_index(Reader& r, std::string const& keyword) {
      std::string const value = keyword_value(r, keyword);
      return parse_index(value, r.number());
    }

    struct Body {
      std::vector<std::string> labels;
      Table                    table;
    };

    // Optional labels line, then "table" and `rows` rows of `cols` entries.
    Body read_body(Reader& r, std::size_t rows, std::size_t cols, bool partial) {
      Body b;
      Line line = r.expect("'table'");
      if (line.words[0] == "labels") {
        b.labels.assign(line.words.begin() + 1, line.words.end());
        if (b.labels.size() != rows) {
          throw ParseError("expected " + std::to_string(rows) + " labels",
                           line.number);
        }
        line = r.expect("'table'");
      }
      if (line.words.size() != 1 || line.words[0] != "table") {
        throw ParseError("expected 'table'", line.number);
      }
      for (std::size_t i = 0; i < rows; ++i) {
        Line row = r.expect("table row");
        if (row.words.size() != cols) {
          throw ParseError("row has " + std::to_string(row.words.size())
                               + " entries, expected " + std::to_string(cols),
                           row.number);
        }
        std::vector<Index> entries;
        for (auto const& w : row.words) {
          entries.push_back(parse_entry(w, row.number, partial));
        }
        b.table.push_back(std::move(entries));
      }
      Line extra;
      if (r.next(extra)) {
        throw ParseError("trailing content after table", extra.number);
      }
      return b;
    }

    std::string expect_header(Reader& r, std::string const& keyword) {
      return keyword_value(r, keyword);
    }

    struct MonoidHeader {
      std::string name;
      std::size_t order    = 0;
      Index       identity = 0;
      Body        body;
    };

    MonoidHeader read_monoid(std::istream& in, std::string const& keyword, bool partial) {
      Reader       r(in);
      MonoidHeader h;
      h.name     = expect_header(r, keyword);
      h.order    = keyword_index(r, "order");
      h.identity = keyword_index(r, "identity");
      h.body     = read_body(r, h.order, h.order, partial);
      return h;
    }

    struct ActHeader {
      std::string name;
      std::string monoid;
      std::size_t size = 0;
      Body        body;
    };

    ActHeader read_act(std::istream&      in,
                       std::string const& keyword,
                       std::string const& monoid_name,
                       std::size_t        order,
                       bool               partial) {
      Reader    r(in);
      ActHeader h;
      h.name   = expect_header(r, keyword);
      h.monoid = keyword_value(r, "monoid");
      if (h.monoid != monoid_name) {
        throw ParseError("act is over monoid '" + h.monoid + "', given '"
                             + monoid_name + "'",
                         r.number());
      }
      h.size = keyword_index(r, "size");
      h.body = read_body(r, h.size, order, partial);
      return h;
    }

    void write_labels(std::ostream& out, std::vector<std::string> const& labels) {
      if (labels.empty()) {
        return;
      }
      out << "labels";
      for (auto const& l : labels) {
        out << ' ' << l;
      }
      out << '\n';
    }

    void write_rows(std::ostream& out, Table const& t) {
      out << "table\n";
      for (auto const& row : t) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          out << (k ? " " : "");
          if (row[k] == undefined) {
            out << '-';
          } else {
            out << row[k];
          }
        }
        out << '\n';
      }
    }

    void write_set(std::ostream& out, ElementSet const& s) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        out << (k ? " " : "") << s[k];
      }
    }

    std::ifstream open(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
      }
      return in;
    }
  }  // namespace

  NamedMonoid parse_monoid(std::istream& in) {
    MonoidHeader h = read_monoid(in, "monoid", false);
    return {h.name,
            FiniteMonoid::from_table(h.body.table, h.identity, h.body.labels)};
  }

  NamedPartialMonoid parse_partial_monoid(std::istream& in) {
    MonoidHeader h = read_monoid(in, "partialmonoid", true);
    return {h.name,
            PartialMonoid::from_table(h.body.table, h.identity, h.body.labels)};
  }

  NamedAct parse_act(std::istream& in, NamedMonoid const& monoid) {
    ActHeader h = read_act(in, "act", monoid.name, monoid.monoid->order(), false);
    return {h.name,
            h.monoid,
            FiniteAct::from_table(monoid.monoid, h.body.table, h.body.labels)};
  }

  NamedPartialAct parse_partial_act(std::istream&             in,
                                    NamedPartialMonoid const& monoid) {
    ActHeader h
        = read_act(in, "partialact", monoid.name, monoid.monoid->order(), true);
    return {h.name,
            h.monoid,
            PartialAct::from_table(monoid.monoid, h.body.table, h.body.labels)};
  }

  NamedMonoid read_monoid_file(std::string const& path) {
    auto in = open(path);
    return parse_monoid(in);
  }

  NamedAct read_act_file(std::string const& path, NamedMonoid const& monoid) {
    auto in = open(path);
    return parse_act(in, monoid);
  }

  void write_monoid(std::ostream& out, std::string const& name, FiniteMonoid const& m) {
    out << "monoid " << name << "\norder " << m.order() << "\nidentity "
        << m.identity() << '\n';
    write_labels(out, m.labels());
    write_rows(out, m.table());
  }

  void write_partial_monoid(std::ostream&        out,
                            std::string const&   name,
                            PartialMonoid const& m) {
    out << "partialmonoid " << name << "\norder " << m.order() << "\nidentity "
        << m.identity() << '\n';
    write_labels(out, m.labels());
    write_rows(out, m.table());
  }

  void write_act(std::ostream&      out,
                 std::string const& name,
                 std::string const& monoid_name,
                 FiniteAct const&   a) {
    out << "act " << name << "\nmonoid " << monoid_name << "\nsize " << a.size()
        << '\n';
    write_labels(out, a.labels());
    write_rows(out, a.table());
  }

  void write_partial_act(std::ostream&      out,
                         std::string const& name,
                         std::string const& monoid_name,
                         PartialAct const&  a) {
    out << "partialact " << name << "\nmonoid " << monoid_name << "\nsize "
        << a.size() << '\n';
    write_labels(out, a.labels());
    write_rows(out, a.table());
  }

  void write_congruence(std::ostream&      out,
                        std::string const& act_name,
                        Congruence const&  rho) {
    auto const blocks = rho.partition().blocks();
    out << "congruence " << act_name << "\nclasses " << blocks.size() << '\n';
    for (auto const& b : blocks) {
      write_set(out, b);
      out << '\n';
    }
  }

  Congruence parse_congruence(std::istream& in, ActPtr const& act) {
    Reader r(in);
    keyword_value(r, "congruence");
    std::size_t const       k = keyword_index(r, "classes");
    std::vector<ElementSet> blocks;
    for (std::size_t i = 0; i < k; ++i) {
      Line       line = r.expect("class");
      ElementSet b;
      for (auto const& w : line.words) {
        b.push_back(parse_index(w, line.number));
      }
      blocks.push_back(normalize_set(b));
    }
    return verify_congruence(act, Partition::from_blocks(act->size(), blocks));
  }

  void write_certificate(std::ostream&                out,
                         std::string const&           act_name,
                         SeparationCertificate const& cert) {
    out << "separates " << cert.element << " from";
    for (Index x : cert.forbidden) {
      out << ' ' << x;
    }
    out << '\n';
    write_congruence(out, act_name, cert.congruence);
  }

  void write_report(std::ostream&          out,
                    std::string const&     act_name,
                    ConditionReport const& report) {
    out << "condition " << to_string(report.condition) << "\nact " << act_name
        << "\nholds " << (report.holds ? "true" : "false") << "\ninstances "
        << report.instances.size() << '\n';
    for (auto const& inst : report.instances) {
      out << "instance " << inst.element << " from";
      for (Index x : inst.forbidden) {
        out << ' ' << x;
      }
      out << " index ";
      if (inst.certificate) {
        out << inst.certificate->quotient_size();
      } else {
        out << "none";
      }
      out << '\n';
    }
    if (report.counterexample) {
      out << "counterexample " << report.counterexample->first << " from";
      for (Index x : report.counterexample->second) {
        out << ' ' << x;
      }
      out << '\n';
    }
  }

  std::string report_json(std::string const& act_name, ConditionReport const& report) {
    using nlohmann::json;
    json j;
    j["condition"] = to_string(report.condition);
    j["act"]       = act_name;
    j["holds"]     = report.holds;
    json list      = json::array();
    for (auto const& inst : report.instances) {
      json e;
      e["element"]   = inst.element;
      e["forbidden"] = inst.forbidden;
      if (inst.certificate) {
        e["index"]  = inst.certificate->quotient_size();
        e["blocks"] = inst.certificate->congruence.partition().blocks();
      } else {
        e["index"]  = nullptr;
        e["blocks"] = nullptr;
      }
      list.push_back(std::move(e));
    }
    j["instances"] = std::move(list);
    if (report.counterexample) {
      j["counterexample"] = {{"element", report.counterexample->first},
                             {"forbidden", report.counterexample->second}};
    } else {
      j["counterexample"] = nullptr;
    }
    return j.dump(2);
  }

}  // namespace actsep
