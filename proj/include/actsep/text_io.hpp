#pragma once

#include <iosfwd>
#include <string>

#include "actsep/act.hpp"
#include "actsep/congruence.hpp"
#include "actsep/monoid.hpp"
#include "actsep/separability.hpp"

// Line-oriented text formats. Blank lines and everything after '#' are
// ignored. Monoid:
//
//   monoid <name>
//   order <n>
//   identity <k>
//   labels <l_0> ... <l_{n-1}>      (optional)
//   table
//   <n rows of n entries>
//
// Act:
//
//   act <name>
//   monoid <monoid name>
//   size <k>
//   labels ...                      (optional)
//   table
//   <k rows of n entries>
//
// `partialmonoid` and `partialact` are the same with '-' for undefined
// entries.
namespace actsep {

  struct NamedMonoid {
    std::string name;
    MonoidPtr   monoid;
  };

  struct NamedPartialMonoid {
    std::string      name;
    PartialMonoidPtr monoid;
  };

  struct NamedAct {
    std::string name;
    std::string monoid_name;
    ActPtr      act;
  };

  struct NamedPartialAct {
    std::string   name;
    std::string   monoid_name;
    PartialActPtr act;
  };

  // Parsers throw ParseError for syntax problems and the usual validation
  // errors for bad tables.
  NamedMonoid        parse_monoid(std::istream& in);
  NamedPartialMonoid parse_partial_monoid(std::istream& in);
  // The monoid name in the file must match `monoid.name`.
  NamedAct        parse_act(std::istream& in, NamedMonoid const& monoid);
  NamedPartialAct parse_partial_act(std::istream&             in,
                                    NamedPartialMonoid const& monoid);

  NamedMonoid read_monoid_file(std::string const& path);
  NamedAct    read_act_file(std::string const& path, NamedMonoid const& monoid);

  void write_monoid(std::ostream& out, std::string const& name, FiniteMonoid const& m);
  void write_partial_monoid(std::ostream&        out,
                            std::string const&   name,
                            PartialMonoid const& m);
  void write_act(std::ostream&      out,
                 std::string const& name,
                 std::string const& monoid_name,
                 FiniteAct const&   a);
  void write_partial_act(std::ostream&      out,
                         std::string const& name,
                         std::string const& monoid_name,
                         PartialAct const&  a);

  // congruence <act name>
  // classes <k>
  // <members of each block, blocks by least member>
  void write_congruence(std::ostream&      out,
                        std::string const& act_name,
                        Congruence const&  rho);
  // Reads the blocks back and verifies them against the act.
  Congruence parse_congruence(std::istream& in, ActPtr const& act);

  // separates <element> from <sorted members>, then the congruence.
  void write_certificate(std::ostream&                out,
                         std::string const&           act_name,
                         SeparationCertificate const& cert);

  // Text report: one key-value record per line.
  //
  //   condition <rf|wss|sss|cs>
  //   act <name>
  //   holds <true|false>
  //   instances <count>
  //   instance <element> from <members> index <k>   (or "index none")
  //   counterexample <element> from <members>       (only if it fails)
  void write_report(std::ostream&          out,
                    std::string const&     act_name,
                    ConditionReport const& report);
  // The same facts as a JSON document; blocks of each certificate included.
  std::string report_json(std::string const& act_name, ConditionReport const& report);

}  // namespace actsep
