#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "arxdp/adp_matrix.hpp"
#include "arxdp/adp_recurrence.hpp"
#include "arxdp/adp_xr.hpp"
#include "arxdp/error.hpp"
#include "arxdp/impossible.hpp"
#include "arxdp/maxima.hpp"
#include "arxdp/oracle.hpp"
#include "arxdp/zero_tables.hpp"

namespace arxdp::cli {

namespace {


Format parse_format(const std::string& s) {
  if (s == "decimal") return Format::decimal;
  if (s == "both") return Format::both;
  return Format::exact;
}

std::string decimal(const Dyadic& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "~%.12g", p.to_double());
  return buf;
}

struct Triple {
  Word alpha, beta, gamma;
};

Triple parse_triple(const std::vector<std::string>& fields, unsigned n) {
  if (fields.size() != 3) {
    throw ParseError("expected 3 differences (alpha beta gamma), got " + std::to_string(fields.size()));
  }
  return {Word::parse(fields[0], n), Word::parse(fields[1], n), Word::parse(fields[2], n)};
}

// Runs fn over the positional triple or every line of a batch file.
void for_each_triple(const std::vector<std::string>& positional, const std::string& batch, unsigned n,
                     std::ostream& out, const std::function<std::string(const Triple&)>& fn) {
  if (batch.empty()) {
    out << fn(parse_triple(positional, n)) << '\n';
    return;
  }
  if (!positional.empty()) throw ParseError("differences and --batch are mutually exclusive");
  std::ifstream in(batch);
  if (!in) throw ParseError("cannot open batch file '" + batch + "'");
  std::string line;
  for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields_in(line);
    std::vector<std::string> fields;
    for (std::string f; fields_in >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    try {
      out << fn(parse_triple(fields, n)) << '\n';
    } catch (const std::invalid_argument& e) {
      throw ParseError(batch + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

unsigned parse_r(const std::string& text, unsigned n) {
  if (text == "n-1") return n - 1;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError("--r expects a number or 'n-1', got '" + text + "'");
  return static_cast<unsigned>(v);
}

std::string witness_str(const Word& beta, const Word& gamma) {
  return "beta=" + beta.to_binary() + " gamma=" + gamma.to_binary();
}

// One-bit table as printed by the tables command: rows "sss: p00 p01 p10 p11 | c0 c1".
std::string table1_row(unsigned s, const std::array<Dyadic, 6>& v) {
  std::string row;
  for (int bit = 2; bit >= 0; --bit) row.push_back(static_cast<char>('0' + ((s >> bit) & 1u)));
  row += ":";
  for (unsigned k = 0; k < 6; ++k) {
    row += k == 4 ? " | " : " ";
    row += v[k].str();
  }
  return row;
}

const std::array<std::array<Dyadic, 6>, 8>& table1_expected() {
  static const std::array<std::array<Dyadic, 6>, 8> t = [] {
    const Dyadic o = Dyadic::one(), z = Dyadic::zero(), h(1, 1), q(1, 2);
    std::array<std::array<Dyadic, 6>, 8> e;
    for (auto& row : e) row.fill(z);
    e[0] = {o, z, z, z, o, z};
    e[3] = {h, h, z, z, h, h};
    e[5] = {h, z, h, z, h, h};
    e[6] = {q, q, q, q, o, z};
    return e;
  }();
  return t;
}

struct Table6Entry {
  unsigned n, r;
  unsigned long expected;
};
constexpr std::array<Table6Entry, 6> kTable6 = {{{2, 1, 22}, {3, 1, 182}, {3, 2, 150}, {4, 1, 1462}, {4, 2, 1166}, {4, 3, 1046}}};

}  // namespace

std::string render(const Dyadic& p, unsigned n, Format format) {
  if (format == Format::decimal) return decimal(p);
  std::string s;
  const Dyadic c = p.canonical();
  if (c.log2_den() == 0) {
    s = c.str();
  } else {
    const std::string scaled = p.scaled_str(2 * static_cast<std::uint64_t>(n));
    s = scaled == c.str() ? scaled : scaled + " = " + c.str();
  }
  if (format == Format::both) s += " (" + decimal(p) + ")";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive differential probabilities of XOR and rotated XOR"};
  app.name("arxdp");
  app.require_subcommand(1);

  unsigned n = 0;
  unsigned r = 0;
  unsigned c_flag = 0, a_flag = 0, b_flag = 0;
  std::string format_text = "exact";
  std::string batch;
  std::vector<std::string> positional;

  const auto add_compute = [&](const std::string& name, const std::string& desc, bool needs_r) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--n", n, "word size in bits")->required()->check(CLI::Range(1u, 4096u));
    if (needs_r) sub->add_option("--r", r, "rotation amount")->required();
    sub->add_option("--format", format_text, "exact | decimal | both")
        ->check(CLI::IsMember({"exact", "decimal", "both"}));
    sub->add_option("--batch", batch, "file with one 'alpha beta gamma' triple per line");
    sub->add_option("differences", positional, "alpha beta gamma (0b... or 0x...)");
    return sub;
  };
  auto* cmd_xor = add_compute("adp-xor", "adp of x ^ y", false);
  auto* cmd_xr = add_compute("adp-xr", "adp of (x ^ y) <<< r", true);
  auto* cmd_rx = add_compute("adp-rx", "adp of (x <<< r) ^ y", true);
  auto* cmd_cadp = add_compute("cadp", "carry-selected partial sum cadp_c", false);
  cmd_cadp->add_option("--c", c_flag, "carry flag")->required()->check(CLI::Range(0u, 1u));
  auto* cmd_padp = add_compute("padp", "pair-selected partial sum padp_{a,b}", false);
  cmd_padp->add_option("--a", a_flag)->required()->check(CLI::Range(0u, 1u));
  cmd_padp->add_option("--b", b_flag)->required()->check(CLI::Range(0u, 1u));

  auto* cmd_max = app.add_subcommand("max", "maximum of adp_xr over (beta, gamma) for a fixed difference");
  std::string r_text;
  std::string fix_alpha;
  std::string fix_which = "first";
  bool exhaustive = false, verify = false, all_witnesses = false;
  cmd_max->add_option("--n", n)->required()->check(CLI::Range(2u, 4096u));
  cmd_max->add_option("--r", r_text, "1, n-1, or any k with --exhaustive")->required();
  cmd_max->add_option("--fix-alpha", fix_alpha, "the fixed input difference")->required();
  cmd_max->add_option("--fix", fix_which, "which input is fixed")->check(CLI::IsMember({"first", "second"}));
  cmd_max->add_flag("--exhaustive", exhaustive, "search all (beta, gamma)");
  cmd_max->add_flag("--verify", verify, "re-check the closed form by exhaustive search");
  cmd_max->add_flag("--all-witnesses", all_witnesses, "list every maximizing pair");
  cmd_max->add_option("--format", format_text)->check(CLI::IsMember({"exact", "decimal", "both"}));

  auto* cmd_imp = app.add_subcommand("impossible", "impossible differentials of (x ^ y) <<< r");
  cmd_imp->require_subcommand(1);
  auto* imp_check = cmd_imp->add_subcommand("check", "decide whether a triple has probability 0");
  imp_check->add_option("--n", n)->required()->check(CLI::Range(2u, 4096u));
  imp_check->add_option("--r", r)->required();
  imp_check->add_option("differences", positional, "alpha beta gamma");
  imp_check->add_option("--batch", batch);
  std::string method = "automaton";
  auto* imp_count = cmd_imp->add_subcommand("count", "exact number N(n, r) of impossible triples");
  imp_count->add_option("--n", n)->required()->check(CLI::Range(2u, 4096u));
  imp_count->add_option("--r", r)->required();
  imp_count->add_option("--method", method)->check(CLI::IsMember({"automaton", "inclusion-exclusion", "brute"}));
  auto* imp_bounds = cmd_imp->add_subcommand("bounds", "closed-form bracket for N(n, r)");
  imp_bounds->add_option("--n", n)->required()->check(CLI::Range(2u, 4096u));
  imp_bounds->add_option("--r", r)->required();

  auto* cmd_tables = app.add_subcommand("tables", "regenerate reference tables");
  std::string which;
  bool diff = false;
  cmd_tables->add_option("which", which, "table1 | table6")->required()->check(CLI::IsMember({"table1", "table6"}));
  cmd_tables->add_flag("--diff", diff, "compare against the expected values");

  auto* cmd_verify = app.add_subcommand("verify", "compare adp_xr and adp_rx against brute-force enumeration");
  unsigned samples = 1000;
  std::uint64_t seed = 1;
  bool all_triples = false;
  cmd_verify->add_option("--n", n)->required()->check(CLI::Range(2u, kOracleMaxBits));
  cmd_verify->add_option("--r", r)->required();
  cmd_verify->add_option("--samples", samples);
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_flag("--all", all_triples, "every triple instead of random samples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Format format = parse_format(format_text);
  try {
    if (*cmd_xor || *cmd_xr || *cmd_rx || *cmd_cadp || *cmd_padp) {
      for_each_triple(positional, batch, n, out, [&](const Triple& t) {
        Dyadic p;
        if (*cmd_xor) {
          p = adp_xor(t.alpha, t.beta, t.gamma);
        } else if (*cmd_xr) {
          p = adp_xr(t.alpha, t.beta, t.gamma, r);
        } else if (*cmd_rx) {
          p = adp_rx(t.alpha, t.beta, t.gamma, r);
        } else if (*cmd_cadp) {
          p = cadp(c_flag, t.alpha, t.beta, t.gamma);
        } else {
          p = padp(a_flag, b_flag, t.alpha, t.beta, t.gamma);
        }
        return render(p, n, format);
      });
      return kOk;
    }

    if (*cmd_max) {
      const Word alpha = Word::parse(fix_alpha, n);
      const unsigned rot = parse_r(r_text, n);
      check_rotation(rot, n);
      const FixedArg fixed = fix_which == "second" ? FixedArg::second : FixedArg::first;
      std::optional<MaxReport> rep;
      if (exhaustive || all_witnesses) {
        rep = max_exhaustive(alpha, rot, fixed, all_witnesses);
      } else {
        try {
          rep = max_closed_form(alpha, rot);
        } catch (const std::domain_error& e) {
          err << "refused: " << e.what() << '\n';
          return kUsage;
        }
        // Swapping the inputs leaves adp_xr unchanged, so the same pair is optimal.
        rep->fixed = fixed;
      }
      const char* free_name = fixed == FixedArg::first ? "beta" : "alpha";
      out << "fixed: " << (fixed == FixedArg::first ? "alpha" : "beta") << "=" << alpha.to_binary() << '\n';
      out << "r: " << rot << '\n';
      out << "case: " << case_name(rep->case_tag) << '\n';
      out << "value: " << render(rep->value, n, format) << '\n';
      out << "witness: " << free_name << "=" << rep->witness_beta.to_binary()
          << " gamma=" << rep->witness_gamma.to_binary() << '\n';
      if (rep->second_witness) {
        out << "second witness: " << free_name << "=" << rep->second_witness->first.to_binary()
            << " gamma=" << rep->second_witness->second.to_binary() << '\n';
      }
      if (rep->all_witnesses) {
        out << "all witnesses: " << rep->all_witnesses->size() << '\n';
        for (const auto& [b, g] : *rep->all_witnesses) out << "  " << witness_str(b, g) << '\n';
      }
      if (verify) {
        const MaxReport ex = max_exhaustive(alpha, rot, fixed);
        const auto attains = [&](const Word& free, const Word& gamma) {
          return (fixed == FixedArg::first ? adp_xr(alpha, free, gamma, rot) : adp_xr(free, alpha, gamma, rot)) ==
                 ex.value;
        };
        bool ok = ex.value == rep->value && attains(rep->witness_beta, rep->witness_gamma);
        if (rep->second_witness) ok = ok && attains(rep->second_witness->first, rep->second_witness->second);
        out << "verify: " << (ok ? "ok" : "MISMATCH") << " (exhaustive max " << render(ex.value, n, format) << ")\n";
        if (!ok) return kMismatch;
      }
      return kOk;
    }

    if (*imp_check) {
      for_each_triple(positional, batch, n, out, [&](const Triple& t) {
        const ZeroReport z = adp_xr_zero(XrInstance(t.alpha, t.beta, t.gamma, r));
        return z.is_zero ? "impossible " + *z.matched : std::string("possible");
      });
      return kOk;
    }

    if (*imp_count) {
      BigInt count;
      if (method == "brute") {
        count = count_impossible_bruteforce(n, r);
      } else if (method == "inclusion-exclusion") {
        count = count_impossible_inclusion_exclusion(n, r);
      } else {
        count = count_impossible(n, r);
      }
      out << count << '\n';
      const BigInt xor_count = count_xor_impossible(n);
      char buf[128];
      std::snprintf(buf, sizeof buf, "ratio ~%.6f, xor %s ratio ~%.6f", Dyadic(count, 3 * n).to_double(),
                    xor_count.str().c_str(), Dyadic(xor_count, 3 * n).to_double());
      out << buf << '\n';
      return kOk;
    }

    if (*imp_bounds) {
      const ImpossibleBounds b = impossible_bounds(n, r);
      out << b.lower << " <= N(" << n << "," << r << ") <= " << b.upper << '\n';
      return kOk;
    }

    if (*cmd_tables) {
      bool mismatch = false;
      if (which == "table1") {
        out << "sym: padp00 padp01 padp10 padp11 | cadp0 cadp1\n";
        for (unsigned s = 0; s < 8; ++s) {
          const OctalWord w({static_cast<std::uint8_t>(s)});
          const std::array<Dyadic, 6> v = {padp(0, 0, w), padp(0, 1, w), padp(1, 0, w),
                                           padp(1, 1, w), cadp(0, w),    cadp(1, w)};
          out << table1_row(s, v) << '\n';
          if (diff && v != table1_expected()[s]) {
            err << "mismatch: got " << table1_row(s, v) << ", expected " << table1_row(s, table1_expected()[s]) << '\n';
            mismatch = true;
          }
        }
      } else {
        for (const auto& e : kTable6) {
          const BigInt got = count_impossible(e.n, e.r);
          out << "N(" << e.n << "," << e.r << ") = " << got << '\n';
          if (diff && got != e.expected) {
            err << "mismatch: N(" << e.n << "," << e.r << ") = " << got << ", expected " << e.expected << '\n';
            mismatch = true;
          }
        }
      }
      if (diff) out << (mismatch ? "diff: MISMATCH" : "diff: ok") << '\n';
      return mismatch ? kMismatch : kOk;
    }

    if (*cmd_verify) {
      check_rotation(r, n);
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      std::uint64_t checked = 0, bad = 0;
      const auto check = [&](std::uint64_t a, std::uint64_t b, std::uint64_t g) {
        const Word wa = Word::from_value(n, a), wb = Word::from_value(n, b), wg = Word::from_value(n, g);
        if (adp_xr(wa, wb, wg, r) != oracle_adp(OracleFunction::xr(r), wa, wb, wg).prob()) {
          err << "xr mismatch: " << wa.to_binary() << ' ' << wb.to_binary() << ' ' << wg.to_binary() << '\n';
          ++bad;
        }
        if (adp_rx(wa, wb, wg, r) != oracle_adp(OracleFunction::rx(r), wa, wb, wg).prob()) {
          err << "rx mismatch: " << wa.to_binary() << ' ' << wb.to_binary() << ' ' << wg.to_binary() << '\n';
          ++bad;
        }
        ++checked;
      };
      if (all_triples) {
        for (std::uint64_t a = 0; a <= mask; ++a)
          for (std::uint64_t b = 0; b <= mask; ++b)
            for (std::uint64_t g = 0; g <= mask; ++g) check(a, b, g);
      } else {
        std::mt19937_64 rng(seed);
        for (unsigned i = 0; i < samples; ++i) {
          const std::uint64_t a = rng() & mask, b = rng() & mask, g = rng() & mask;
          check(a, b, g);
        }
      }
      out << "checked " << checked << " triples (n=" << n << ", r=" << r << "), " << bad << " mismatches\n";
      return bad == 0 ? kOk : kMismatch;
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace arxdp::cli
