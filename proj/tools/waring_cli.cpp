// Command-line surface for the Waring-number toolkit.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/engine.hpp"
#include "waring/formulas.hpp"
#include "waring/local.hpp"
#include "waring/ring.hpp"
#include "waring/ring_io.hpp"
#include "waring/table.hpp"

namespace {

using waring::i64;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitNotApplicable = 4;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

i64 to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw waring::ValidationError("not an integer: " + s);
  }
}

// `--ring` accepts either a family descriptor (zmod:27, gf:7:2, trunc:3:3,
// quad:2:32:16) or a path to a ring-spec JSON file.
waring::Ring resolve_ring(const std::string& source,
                          const waring::RingOptions& opt) {
  auto parts = split(source, ':');
  const std::string& family = parts[0];
  if (family == "zmod" && parts.size() == 2)
    return waring::Ring::zmod(to_int(parts[1]), opt);
  if (family == "gf" && parts.size() == 3)
    return waring::Ring::gf(to_int(parts[1]), to_int(parts[2]), opt);
  if (family == "trunc" && parts.size() == 3)
    return waring::Ring::trunc_poly(to_int(parts[1]), to_int(parts[2]), opt);
  if (family == "quad" && parts.size() == 4)
    return waring::Ring::quadratic_quotient(to_int(parts[1]), to_int(parts[2]),
                                            to_int(parts[3]), opt);
  if (parts.size() > 1)
    throw waring::ValidationError("unknown ring family: " + source);
  return waring::Ring(waring::load_ring_spec(source), opt);
}

// Advisory json-lines cache of waring_number results, keyed by ring source
// and exponent. Entries are never trusted blindly by crosscheck.
class ReportCache {
 public:
  explicit ReportCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key")) continue;
      entries_[j["key"].get<std::string>()] = j;
    }
  }

  std::optional<waring::WaringReport> lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    waring::WaringReport rep;
    rep.w = it->second["w"].get<i64>();
    if (!it->second["s"].is_null()) rep.s = it->second["s"].get<i64>();
    rep.closure_size = it->second["closure"].get<i64>();
    rep.witness_w = it->second["witness_w"].get<i64>();
    rep.covers_ring = it->second["covers"].get<bool>();
    return rep;
  }

  void store(const std::string& key, const waring::WaringReport& rep) {
    nlohmann::json j;
    j["key"] = key;
    j["w"] = rep.w;
    if (rep.s)
      j["s"] = *rep.s;
    else
      j["s"] = nullptr;
    j["closure"] = rep.closure_size;
    j["witness_w"] = rep.witness_w;
    j["covers"] = rep.covers_ring;
    entries_[key] = j;
    dirty_ = true;
  }

  const std::map<std::string, nlohmann::json>& entries() const {
    return entries_;
  }

  void flush() {
    if (!dirty_) return;
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& [key, j] : entries_) out << j.dump() << '\n';
    dirty_ = false;
  }

 private:
  std::string path_;
  std::map<std::string, nlohmann::json> entries_;
  bool dirty_ = false;
};

void print_trace(const waring::ReductionTrace& trace) {
  std::cout << "theorem: " << waring::to_string(trace.tag) << '\n';
  if (!trace.quotient_label.empty()) {
    std::cout << "quotient: " << trace.quotient_label;
    if (trace.quotient_w) std::cout << "  w=" << *trace.quotient_w;
    if (trace.quotient_s) std::cout << "  s=" << *trace.quotient_s;
    std::cout << '\n';
  }
  if (trace.extrapolated)
    std::cout << "note: quotient choice extrapolated beyond the stated cases\n";
  for (const auto& note : trace.notes) std::cout << "note: " << note << '\n';
}

struct Options {
  std::string ring_source;
  std::string spec_file;
  std::string field_source = "gf:2:1";
  std::string flavor = "formal";
  std::string format = "markdown";
  std::string cache_path;
  i64 n = 2;
  i64 p = 2;
  i64 d = 2;
  i64 pmax = 50;
  i64 nmax = 12;
  i64 cap = waring::kDefaultSizeCap;
  int threads = 0;
  bool field = false;
  bool classify = false;
};

waring::TableFormat parse_format(const std::string& name) {
  if (name == "markdown") return waring::TableFormat::MARKDOWN;
  if (name == "csv") return waring::TableFormat::CSV;
  if (name == "json-lines") return waring::TableFormat::JSON_LINES;
  throw waring::ValidationError("unknown format: " + name);
}

waring::SeriesFlavor parse_flavor(const std::string& name) {
  if (name == "formal") return waring::SeriesFlavor::FORMAL;
  if (name == "laurent") return waring::SeriesFlavor::LAURENT_MULTI;
  if (name == "iterated") return waring::SeriesFlavor::LAURENT_ITERATED;
  if (name == "mixed") return waring::SeriesFlavor::MIXED;
  throw waring::ValidationError("unknown series flavor: " + name);
}

waring::ResidueField parse_field(const std::string& source) {
  auto parts = split(source, ':');
  if (parts.size() == 3 && parts[0] == "gf")
    return waring::ResidueField::finite(to_int(parts[1]), to_int(parts[2]));
  if (parts.size() == 4 && parts[0] == "symbolic") {
    auto opt_val = [](const std::string& s) -> std::optional<i64> {
      if (s == "inf" || s == "?") return std::nullopt;
      return to_int(s);
    };
    return waring::ResidueField::symbolic(opt_val(parts[1]), opt_val(parts[2]),
                                          to_int(parts[3]));
  }
  throw waring::ValidationError(
      "field must be gf:<p>:<j> or symbolic:<w|inf>:<s|inf>:<char>");
}

int cmd_ring_validate(const Options& o) {
  if (o.spec_file.empty() && o.ring_source.empty())
    throw waring::ValidationError("give a spec file or --ring descriptor");
  waring::RingOptions opt{o.cap};
  waring::Ring ring = o.spec_file.empty()
                          ? resolve_ring(o.ring_source, opt)
                          : waring::Ring(waring::load_ring_spec(o.spec_file), opt);
  std::cout << "ok: " << (ring.label().empty() ? "(unlabeled)" : ring.label())
            << "  elements=" << ring.size() << "  rank=" << ring.rank() << '\n';
  return kExitOk;
}

std::string report_json(const std::string& source, i64 n,
                        const waring::WaringReport& rep) {
  nlohmann::json j;
  j["ring"] = source;
  j["n"] = n;
  j["w"] = rep.w;
  if (rep.s)
    j["s"] = *rep.s;
  else
    j["s"] = nullptr;
  j["closure"] = rep.closure_size;
  j["witness_w"] = rep.witness_w;
  j["covers"] = rep.covers_ring;
  return j.dump();
}

int cmd_waring(const Options& o) {
  waring::RingOptions opt{o.cap};
  waring::Ring ring = resolve_ring(o.ring_source, opt);
  std::string key = o.ring_source + "|n=" + std::to_string(o.n);
  std::optional<ReportCache> cache;
  if (!o.cache_path.empty()) cache.emplace(o.cache_path);
  waring::WaringReport rep;
  if (cache && cache->lookup(key)) {
    rep = *cache->lookup(key);
  } else {
    rep = waring::waring_number(ring, o.n);
    if (cache) {
      cache->store(key, rep);
      cache->flush();
    }
  }
  if (o.format == "json-lines") {
    std::cout << report_json(o.ring_source, o.n, rep) << '\n';
    return kExitOk;
  }
  std::cout << "ring: " << ring.label() << "  (" << ring.size()
            << " elements)\n";
  std::cout << "n: " << o.n << '\n';
  std::cout << "w: " << rep.w << "  (witness index " << rep.witness_w << ")\n";
  if (rep.s)
    std::cout << "s: " << *rep.s << '\n';
  else
    std::cout << "s: infinite\n";
  std::cout << "closure: " << rep.closure_size
            << (rep.covers_ring ? " (whole ring)" : "") << '\n';
  return kExitOk;
}

int cmd_padic(const Options& o) {
  waring::RingOptions opt{o.cap};
  waring::LocalResult res = o.field
                                ? waring::padic_field_waring(o.p, o.n, opt)
                                : waring::padic_waring(o.p, o.n, opt);
  std::cout << (o.field ? "Q_" : "Z_") << o.p << "  n=" << o.n << '\n';
  std::cout << "w: " << res.w << '\n';
  if (res.s) std::cout << "s: " << *res.s << '\n';
  print_trace(res.trace);
  return kExitOk;
}

int cmd_table(const Options& o) {
  waring::RingOptions opt{o.cap};
  std::vector<i64> skipped;
  auto rows = waring::prime_table(o.n, o.pmax, o.threads, opt, &skipped);
  std::cout << waring::render_table(rows, parse_format(o.format), o.classify);
  for (i64 p : skipped)
    std::cerr << "warning: p=" << p << " skipped (size cap)\n";
  return kExitOk;
}

int cmd_quadratic(const Options& o) {
  waring::RingOptions opt{o.cap};
  auto res = waring::quadratic_local(o.d, o.p, o.n, opt);
  std::cout << "Z_" << o.p << "[sqrt(" << o.d << ")]  n=" << o.n << '\n';
  std::cout << "w_ring: " << res.w_ring << '\n';
  std::cout << "w_field: " << res.w_field << '\n';
  if (res.s) std::cout << "s: " << *res.s << '\n';
  print_trace(res.trace);
  return kExitOk;
}

int cmd_series(const Options& o) {
  waring::RingOptions opt{o.cap};
  auto res = waring::series_waring(parse_field(o.field_source), o.n,
                                   parse_flavor(o.flavor), 1, opt);
  std::cout << "series over " << o.field_source << "  n=" << o.n
            << "  flavor=" << o.flavor << '\n';
  if (res.value) std::cout << "w: " << *res.value << '\n';
  if (res.lower_bound) std::cout << "w >= " << *res.lower_bound << '\n';
  if (res.s)
    std::cout << "s: " << *res.s << '\n';
  else
    std::cout << "s: infinite\n";
  print_trace(res.trace);
  return kExitOk;
}

int cmd_bound_q(const Options& o) {
  waring::RingOptions opt{o.cap};
  auto res = waring::rational_lower_bound(o.n, o.pmax, opt);
  std::cout << "w_" << o.n << "(Q) >= " << res.bound << " (witness p="
            << res.witness_prime << ")\n";
  if (res.trivial_odd)
    std::cout << "note: odd exponent, every local bound is 2\n";
  for (i64 p : res.skipped_primes)
    std::cerr << "warning: p=" << p << " skipped (size cap)\n";
  return kExitOk;
}

int cmd_crosscheck(const Options& o) {
  waring::RingOptions opt{o.cap};
  auto report = waring::cross_check(o.pmax, o.nmax, opt);
  std::cout << "pairs: " << report.pairs_checked << '\n';
  std::cout << "formulas applied: " << report.formulas_applied << '\n';
  std::cout << "mismatches: " << report.mismatches.size() << '\n';
  for (const auto& m : report.mismatches)
    std::cout << "  p=" << m.p << " n=" << m.n << " " << m.formula << ": "
              << m.detail << '\n';
  for (const auto& s : report.skipped) std::cout << "skipped: " << s << '\n';

  if (!o.cache_path.empty()) {
    // Advisory cache: re-derive every cached record and flag stale entries.
    ReportCache cache(o.cache_path);
    i64 verified = 0, stale = 0;
    for (const auto& [key, j] : cache.entries()) {
      auto bar = key.find("|n=");
      if (bar == std::string::npos) continue;
      waring::Ring ring = resolve_ring(key.substr(0, bar), opt);
      auto rep = waring::waring_number(ring, to_int(key.substr(bar + 3)));
      std::string fresh = j.dump();
      ReportCache probe(o.cache_path);
      probe.store(key, rep);
      if (probe.entries().at(key).dump() == fresh)
        ++verified;
      else {
        ++stale;
        std::cout << "stale cache entry: " << key << '\n';
      }
    }
    std::cout << "cache: " << verified << " verified, " << stale
              << " stale\n";
  }
  return report.mismatches.empty() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waring numbers of finite rings, p-adic rings and fields"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", o.cap, "ring cardinality cap");
  };

  auto* validate = app.add_subcommand("ring-validate", "check a ring spec");
  validate->add_option("spec", o.spec_file, "ring spec JSON file");
  validate->add_option("--ring", o.ring_source, "builtin family descriptor");
  add_common(validate);

  auto* war = app.add_subcommand("waring", "w_n / s_n of a finite ring");
  war->add_option("--ring", o.ring_source, "family descriptor or spec file")
      ->required();
  war->add_option("--n", o.n, "exponent")->required();
  war->add_option("--format", o.format, "markdown|csv|json-lines");
  war->add_option("--cache", o.cache_path, "json-lines result cache");
  add_common(war);

  auto* padic = app.add_subcommand("padic", "w_n of Z_p or Q_p");
  padic->add_option("--p", o.p, "prime")->required();
  padic->add_option("--n", o.n, "exponent")->required();
  padic->add_flag("--field", o.field, "compute for Q_p instead of Z_p");
  add_common(padic);

  auto* table = app.add_subcommand("table", "per-prime table of w_n values");
  table->add_option("--n", o.n, "exponent")->required();
  table->add_option("--pmax", o.pmax, "prime bound")->required();
  table->add_option("--format", o.format, "markdown|csv|json-lines");
  table->add_option("--threads", o.threads, "worker threads (0 = auto)");
  table->add_flag("--classify", o.classify, "group primes by value class");
  add_common(table);

  auto* quad = app.add_subcommand("quadratic", "w_n of Z_p[sqrt(d)]");
  quad->add_option("--d", o.d, "squarefree d")->required();
  quad->add_option("--p", o.p, "prime")->required();
  quad->add_option("--n", o.n, "exponent")->required();
  add_common(quad);

  auto* series = app.add_subcommand("series", "w_n of series rings over k");
  series->add_option("--field", o.field_source,
                     "gf:<p>:<j> or symbolic:<w|inf>:<s|inf>:<char>")
      ->required();
  series->add_option("--n", o.n, "exponent")->required();
  series->add_option("--flavor", o.flavor, "formal|laurent|iterated|mixed");
  add_common(series);

  auto* bound = app.add_subcommand("bound-q", "lower bound for w_n(Q)");
  bound->add_option("--n", o.n, "exponent")->required();
  bound->add_option("--pmax", o.pmax, "prime search bound");
  add_common(bound);

  auto* cross = app.add_subcommand("crosscheck",
                                   "closed forms vs reduction pipeline");
  cross->add_option("--pmax", o.pmax, "prime bound");
  cross->add_option("--nmax", o.nmax, "exponent bound");
  cross->add_option("--cache", o.cache_path, "verify this result cache");
  add_common(cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (validate->parsed()) return cmd_ring_validate(o);
    if (war->parsed()) return cmd_waring(o);
    if (padic->parsed()) return cmd_padic(o);
    if (table->parsed()) return cmd_table(o);
    if (quad->parsed()) return cmd_quadratic(o);
    if (series->parsed()) return cmd_series(o);
    if (bound->parsed()) return cmd_bound_q(o);
    if (cross->parsed()) return cmd_crosscheck(o);
  } catch (const waring::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const waring::NotApplicableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const waring::NotSupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const waring::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
