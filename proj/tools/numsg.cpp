// numsg: command-line front end for the numerical semigroup library.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "numsg/buchweitz.hpp"
#include "numsg/census.hpp"
#include "numsg/decompose.hpp"
#include "numsg/encoding.hpp"
#include "numsg/error.hpp"
#include "numsg/pfseq.hpp"
#include "numsg/semigroup.hpp"

using json = nlohmann::json;
using namespace numsg;

namespace {

  constexpr int exit_domain_error = 1;
  constexpr int exit_usage_error  = 2;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // --gens / --gaps pair shared by several subcommands.
  struct SemigroupArg {
    std::string gens;
    std::string gaps;

    void attach(CLI::App* app) {
      auto* g = app->add_option("--gens", gens, "minimal or any generators, e.g. 5,7,11,13");
      auto* h = app->add_option("--gaps", gaps, "gap set, e.g. 1,2,3,4,6,8,9");
      g->excludes(h);
    }

    Semigroup get(CLI::App const* app) const {
      if (app->count("--gens") == 1) {
        return parse_semigroup("gens:" + std::string(strip_prefix(gens, "gens:")));
      }
      if (app->count("--gaps") == 1) {
        return parse_semigroup("gaps:" + std::string(strip_prefix(gaps, "gaps:")));
      }
      throw UsageError("one of --gens or --gaps is required");
    }
  };

  std::string join(std::vector<std::int64_t> const& v) {
    return v.empty() ? "(none)" : format_int_list(v);
  }

  // ---------------------------------------------------------------- info

  json info_json(Semigroup const& s) {
    auto const inv = s.invariants();
    json       j;
    j["gens"]         = s.minimal_generators();
    j["gaps"]         = s.gaps().values();
    j["encoding"]     = {{"gens", encode_gens(s)}, {"gaps", encode_gaps(s)}};
    j["multiplicity"] = inv.multiplicity;
    j["genus"]        = inv.genus;
    j["frobenius"]    = inv.frobenius;
    j["conductor"]    = inv.conductor;
    j["type"]         = inv.type;
    j["pseudo_frobenius"] =
        s.is_naturals() ? std::vector<std::int64_t>{} : s.pseudo_frobenius();
    j["schubert_index"] = s.schubert_index();
    return j;
  }

  void print_info(Semigroup const& s, std::ostream& out) {
    auto const inv = s.invariants();
    out << encode_gens(s) << '\n'
        << encode_gaps(s) << '\n'
        << "multiplicity: " << inv.multiplicity << '\n'
        << "genus: " << inv.genus << '\n'
        << "frobenius: " << inv.frobenius << '\n'
        << "conductor: " << inv.conductor << '\n'
        << "type: " << inv.type << '\n'
        << "pseudo-frobenius: "
        << join(s.is_naturals() ? std::vector<std::int64_t>{} : s.pseudo_frobenius()) << '\n'
        << "schubert-index: " << join(s.schubert_index()) << '\n';
  }

  // ------------------------------------------------------------ seq check

  std::pair<std::int64_t, std::int64_t> parse_window(std::string const& text) {
    auto const dots = text.find("..");
    if (dots == std::string::npos) {
      throw UsageError("window must look like A..B, got \"" + text + "\"");
    }
    auto num = [&](std::string const& part) {
      std::int64_t v   = 0;
      auto [p, ec]     = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || p != part.data() + part.size()) {
        throw UsageError("window must look like A..B, got \"" + text + "\"");
      }
      return v;
    };
    auto const lo = num(text.substr(0, dots));
    auto const hi = num(text.substr(dots + 2));
    if (lo > hi) {
      throw UsageError("empty window " + text);
    }
    return {lo, hi};
  }

  json verdict_json(DiffSeq const& d, SequenceVerdict const& v) {
    json j;
    j["seq"]                    = encode_sequence(d);
    j["t"]                      = v.t;
    j["a"]                      = d_to_a(d).values();
    j["condition2_cardinality"] = v.condition2_cardinality;
    j["condition2_threshold"]   = v.condition2_threshold;
    j["corollary_bound"] = v.corollary_bound ? json(*v.corollary_bound) : json(nullptr);
    j["verified_genera"] = json::array();
    for (auto const& [g, ok] : v.verified_genera) {
      j["verified_genera"].push_back({{"genus", g}, {"ok", ok}});
    }
    return j;
  }

  void print_verdict(DiffSeq const& d, SequenceVerdict const& v, std::ostream& out) {
    out << encode_sequence(d) << '\n'
        << "t: " << v.t << '\n'
        << "a: " << format_int_list(d_to_a(d).values()) << '\n'
        << "pair-sums: " << v.condition2_cardinality << " (needs > "
        << v.condition2_threshold << ")\n"
        << "corollary_bound: ";
    if (v.corollary_bound) {
      out << *v.corollary_bound << '\n';
    } else {
      out << "none\n";
    }
    if (!v.verified_genera.empty()) {
      out << "verified:\n";
      for (auto const& [g, ok] : v.verified_genera) {
        out << "  " << g << ' ' << (ok ? "true" : "false") << '\n';
      }
    }
  }

  // --------------------------------------------------------------- census

  void print_census_table(std::vector<CensusRow> const& rows, std::ostream& out) {
    out << std::setw(6) << "genus" << std::setw(12) << "NS" << std::setw(10) << "2-BS"
        << std::setw(10) << "2-BPFS" << '\n';
    for (auto const& r : rows) {
      out << std::setw(6) << r.genus << std::setw(12) << r.ns << std::setw(10) << r.b2s
          << std::setw(10) << r.b2pfs << '\n';
    }
  }

  BoundedSeq bounded(std::string const& text) {
    auto const p = parse_sequence(text);
    if (p.genus) {
      return {p.seq, *p.genus};
    }
    // Without an annotation the sequence is taken at its own corollary bound.
    if (p.seq.type() < 2) {
      return {p.seq, 0};
    }
    auto const v = corollary_bound(p.seq);
    return {p.seq, v.corollary_bound.value_or(0)};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with numerical semigroups: PF-semigroups, "
               "Buchweitz sumsets, sequence families and the genus census."};
  app.require_subcommand(1);

  std::string format = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
  };

  // info
  SemigroupArg info_arg;
  auto*        info = app.add_subcommand("info", "invariants, PF set and Schubert index");
  info_arg.attach(info);
  add_format(info);

  // buchweitz
  SemigroupArg bw_arg;
  int          bw_n = 2;
  auto*        bw   = app.add_subcommand("buchweitz", "n-fold gap sumset test");
  bw_arg.attach(bw);
  bw->add_option("--n", bw_n, "sumset order (>= 2)")->required();
  add_format(bw);

  // pf-check
  SemigroupArg pf_arg;
  auto*        pfc = app.add_subcommand("pf-check", "PF-semigroup predicate");
  pf_arg.attach(pfc);
  add_format(pfc);

  // seq
  auto* seq = app.add_subcommand("seq", "difference-sequence families");
  seq->require_subcommand(1);

  std::string                 check_d;
  std::optional<std::int64_t> check_genus;
  std::string                 check_window;
  auto* check = seq->add_subcommand("check", "corollary bound and direct verification");
  check->add_option("D", check_d, "sequence, e.g. 1,3,3,2")->required();
  auto* genus_opt  = check->add_option("--genus", check_genus, "verify a single genus");
  auto* window_opt = check->add_option("--window", check_window, "verify every genus in A..B");
  genus_opt->excludes(window_opt);
  add_format(check);

  std::string  paste_b;
  std::string  paste_a;
  std::int64_t paste_k = 0;
  bool         paste_raw = false;
  auto* paste_cmd = seq->add_subcommand("paste", "concatenate DB, k, DA");
  paste_cmd->add_option("DB", paste_b, "leading sequence, e.g. 1,4,3@22")->required();
  paste_cmd->add_option("DA", paste_a, "trailing sequence, e.g. 2,4,3@23")->required();
  paste_cmd->add_option("--k", paste_k, "separator entry (>= 1)")->required();
  paste_cmd->add_flag("--unchecked", paste_raw, "skip all precondition checks");
  add_format(paste_cmd);

  // decompose
  SemigroupArg dec_arg;
  auto*        dec = app.add_subcommand("decompose", "stair-block decomposition of a PF-semigroup");
  dec_arg.attach(dec);
  add_format(dec);

  // census
  int         census_from = 0;
  int         census_to   = 0;
  std::string census_csv_path;
  unsigned    census_threads = 0;
  auto*       cen = app.add_subcommand("census", "count semigroups per genus");
  cen->add_option("--from", census_from, "first genus (>= 2)")->required();
  cen->add_option("--to", census_to, "last genus")->required();
  cen->add_option("--csv", census_csv_path, "write CSV to PATH ('-' for stdout)");
  cen->add_option("--threads", census_threads, "worker threads (default: NUMSG_THREADS or all cores)");
  add_format(cen);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage_error;
  }

  bool const as_json = format == "json";
  auto&      out     = std::cout;

  try {
    if (*info) {
      auto const s = info_arg.get(info);
      if (as_json) {
        out << info_json(s).dump(2) << '\n';
      } else {
        print_info(s, out);
      }
    } else if (*bw) {
      auto const s = bw_arg.get(bw);
      auto const r = buchweitz_test(s, bw_n);
      if (as_json) {
        out << json{{"n", r.n},
                    {"cardinality", r.cardinality},
                    {"threshold", r.threshold},
                    {"is_buchweitz", r.is_buchweitz}}
                   .dump(2)
            << '\n';
      } else {
        out << "n: " << r.n << "\ncardinality: " << r.cardinality
            << "\nthreshold: " << r.threshold
            << "\nis_buchweitz: " << (r.is_buchweitz ? "true" : "false") << '\n';
      }
    } else if (*pfc) {
      auto const s = pf_arg.get(pfc);
      auto const c = check_pf_semigroup(s);
      if (as_json) {
        json j{{"is_pf", c.is_pf}};
        if (!c.is_pf) {
          j["reason"] = c.reason;
        }
        out << j.dump(2) << '\n';
      } else {
        out << (c.is_pf ? "true" : "false") << '\n';
        if (!c.is_pf) {
          out << "reason: " << c.reason << '\n';
        }
      }
    } else if (*check) {
      auto const      d = parse_sequence(check_d).seq;
      SequenceVerdict v = corollary_bound(d);
      if (check_genus) {
        v = check_sequence(d, *check_genus, *check_genus);
      } else if (!check_window.empty()) {
        auto const [lo, hi] = parse_window(check_window);
        v                   = check_sequence(d, lo, hi);
      } else if (v.corollary_bound) {
        v = check_sequence(d, *v.corollary_bound, *v.corollary_bound + 20);
      }
      if (as_json) {
        out << verdict_json(d, v).dump(2) << '\n';
      } else {
        print_verdict(d, v, out);
      }
    } else if (*paste_cmd) {
      auto const b = bounded(paste_b);
      auto const a = bounded(paste_a);
      auto const r = paste_raw ? paste_unchecked(a, b, paste_k) : paste(a, b, paste_k);
      if (as_json) {
        out << json{{"seq", r.seq.values()},
                    {"genus_bound", r.genus},
                    {"encoding", encode_sequence(r)},
                    {"checked", !paste_raw}}
                   .dump(2)
            << '\n';
      } else {
        out << encode_sequence(r) << '\n';
      }
    } else if (*dec) {
      auto const s      = dec_arg.get(dec);
      auto const blocks = decompose_pf(s);
      if (as_json) {
        json j = json::array();
        for (auto const& b : blocks) {
          j.push_back({{"f", b.realized.frobenius()},
                       {"gi", b.gi},
                       {"parity", b.parity == StairParity::odd ? "odd" : "even"},
                       {"gaps", encode_gaps(b.realized)}});
        }
        out << j.dump(2) << '\n';
      } else {
        for (auto const& b : blocks) {
          out << encode_gaps(b.realized) << '\n';
        }
      }
    } else if (*cen) {
      auto const rows = census_range(census_from, census_to, {.threads = census_threads});
      if (!census_csv_path.empty()) {
        auto const text = census_csv(rows);
        if (census_csv_path == "-") {
          out << text;
          return 0;
        }
        std::ofstream file(census_csv_path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot write " << census_csv_path << '\n';
          return exit_domain_error;
        }
        file << text;
      }
      if (as_json) {
        json j = json::array();
        for (auto const& r : rows) {
          j.push_back({{"genus", r.genus}, {"ns", r.ns}, {"b2s", r.b2s}, {"b2pfs", r.b2pfs}});
        }
        out << j.dump(2) << '\n';
      } else {
        print_census_table(rows, out);
      }
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage_error;
  } catch (SemigroupError const& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return exit_domain_error;
  }
  return 0;
}
