#include "ternary/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "ternary/catalog.hpp"
#include "ternary/forms.hpp"
#include "ternary/genus.hpp"
#include "ternary/io.hpp"
#include "ternary/lattice.hpp"
#include "ternary/verify.hpp"

namespace ternary {

int defaultOrder() {
  const char* env = std::getenv("TERNARY_ORDER");
  if (!env || !*env) return 1000;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw DomainError(std::string("TERNARY_ORDER must be a positive integer, got '") + env + "'");
  return value;
}

namespace {

std::vector<std::int64_t> parseInts(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::int64_t v = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + comma;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || begin == end) throw DomainError("cannot parse integer list '" + text + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

void requireOddPrimes(const std::vector<std::int64_t>& primes) {
  if (primes.empty()) throw DomainError("--p is required");
  for (auto p : primes)
    if (p == 2 || !isPrime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

std::string formText(const TernaryForm& f) { return f.str(); }

void writeGenusTable(std::ostream& os, const std::string& title, const Genus& g) {
  os << title << " discriminant " << g.discriminant << ", " << g.size() << (g.size() == 1 ? " class" : " classes")
     << '\n';
  const auto w = g.weights48();
  for (std::size_t i = 0; i < g.size(); ++i)
    os << "  " << formText(g.members[i]) << "  |Aut| " << g.autCounts[i] << "  48/|Aut| " << w[i] << '\n';
}

void writeGenusCsvRows(std::ostream& os, const std::string& label, const Genus& g) {
  const auto w = g.weights48();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto t = g.members[i].tuple();
    os << label << ',' << g.discriminant;
    for (auto x : t) os << ',' << x;
    os << ',' << g.autCounts[i] << ',' << w[i] << '\n';
  }
}

constexpr const char* kGenusCsvHeader = "genus,discriminant,a,b,c,d,e,f,aut,weight48\n";

int exitFor(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

int cmdVerify(const RunConfig& cfg, const std::vector<std::string>& ids, bool all, bool list, std::ostream& os) {
  if (list) {
    for (const auto& e : catalog()) os << e.id << "  " << e.description << '\n';
    return 0;
  }
  std::vector<IdentitySpec> specs;
  if (all) {
    specs = catalog();
  } else {
    if (ids.empty()) throw DomainError("give --id or --all");
    for (const auto& id : ids) {
      auto spec = lookup(id);
      if (!spec) throw DomainError("unknown identity " + id);
      specs.push_back(std::move(*spec));
    }
  }
  const auto reports = verifySuite(specs, cfg.order);
  writeReports(os, reports, parseFormat(cfg.format), cfg.timing);
  return exitFor(reports);
}

int cmdCount(const RunConfig& cfg, const std::string& formText, std::int64_t n, int maxN, std::ostream& os) {
  const auto v = parseInts(formText);
  if (v.size() != 6 && v.size() != 3) throw DomainError("--form takes 6 (ternary) or 3 (binary) integers");
  const Format format = parseFormat(cfg.format);
  QSeries theta = QSeries::zero(0);
  Json form;
  if (v.size() == 6) {
    const TernaryForm f{v[0], v[1], v[2], v[3], v[4], v[5]};
    if (!f.isPositiveDefinite()) throw DomainError("form " + f.str() + " is not positive definite");
    form = toJson(f);
    if (maxN < 0) {
      const std::int64_t count = repCountTernary(f, n);
      if (format == Format::Json)
        os << Json{{"form", form}, {"n", n}, {"count", count}}.dump() << '\n';
      else if (format == Format::Csv)
        os << "n,count\n" << n << ',' << count << '\n';
      else
        os << count << '\n';
      return 0;
    }
    theta = thetaSeriesTernary(f, maxN);
  } else {
    const BinaryFormExt b{v[0], v[1], v[2]};
    if (!b.isPositiveDefinite()) throw DomainError("binary form is not positive definite");
    form = Json(v);
    if (maxN < 0) {
      if (n < 0 || n > std::numeric_limits<int>::max()) throw DomainError("n out of range");
      maxN = static_cast<int>(std::max<std::int64_t>(n, 0));
      const std::int64_t count = thetaSeriesBinary(b, maxN)[static_cast<int>(n)];
      if (format == Format::Json)
        os << Json{{"form", form}, {"n", n}, {"count", count}}.dump() << '\n';
      else if (format == Format::Csv)
        os << "n,count\n" << n << ',' << count << '\n';
      else
        os << count << '\n';
      return 0;
    }
    theta = thetaSeriesBinary(b, maxN);
  }
  if (format == Format::Json) {
    os << Json{{"form", form}, {"series", toJson(theta)}}.dump() << '\n';
  } else {
    if (format == Format::Csv) os << "n,count\n";
    for (int k = 0; k <= theta.trunc(); ++k) os << k << (format == Format::Csv ? "," : " ") << theta[k] << '\n';
  }
  return 0;
}

int cmdS(const RunConfig& cfg, int maxN, std::ostream& os) {
  if (maxN < 0) throw DomainError("--max must be non-negative");
  const SumOfThreeSquares s(maxN);
  std::vector<std::int64_t> c(static_cast<std::size_t>(maxN) + 1);
  for (int k = 0; k <= maxN; ++k) c[static_cast<std::size_t>(k)] = s(k);
  const Format format = parseFormat(cfg.format);
  if (format == Format::Json) {
    os << toJson(QSeries(std::move(c))).dump() << '\n';
  } else {
    if (format == Format::Csv) os << "n,s\n";
    for (int k = 0; k <= maxN; ++k) os << k << (format == Format::Csv ? "," : " ") << c[static_cast<std::size_t>(k)] << '\n';
  }
  return 0;
}

int cmdGenusPrime(const RunConfig& cfg, std::int64_t p, std::ostream& os) {
  requireOddPrimes({p});
  const Genus g1 = tg1(p), g2 = tg2(p);
  const auto h = findH(p);
  const Format format = parseFormat(cfg.format);
  if (format == Format::Json) {
    Json pairs = Json::array();
    for (const auto& pr : h) pairs.push_back({{"from", toJson(pr.from)}, {"to", toJson(pr.to)}});
    os << Json{{"p", p}, {"tg1", toJson(g1)}, {"tg2", toJson(g2)}, {"h", pairs}}.dump() << '\n';
  } else if (format == Format::Csv) {
    os << kGenusCsvHeader;
    writeGenusCsvRows(os, "TG1", g1);
    writeGenusCsvRows(os, "TG2", g2);
  } else {
    writeGenusTable(os, "TG1", g1);
    writeGenusTable(os, "TG2", g2);
    os << "H\n";
    for (const auto& pr : h) os << "  " << formText(pr.from) << " -> " << formText(pr.to) << '\n';
  }
  return 0;
}

int cmdGenusDisc(const RunConfig& cfg, std::int64_t disc, bool all, std::ostream& os) {
  if (disc < 1) throw DomainError("--disc must be positive");
  const auto parts = genusPartition(disc);
  const Format format = parseFormat(cfg.format);
  if (format == Format::Json) {
    Json genera = Json::array();
    for (const auto& g : parts) genera.push_back(toJson(g));
    os << Json{{"discriminant", disc}, {"genera", genera}}.dump() << '\n';
  } else if (format == Format::Csv) {
    os << kGenusCsvHeader;
    for (std::size_t i = 0; i < parts.size(); ++i) writeGenusCsvRows(os, std::to_string(i + 1), parts[i]);
  } else {
    os << parts.size() << " genera of primitive forms with discriminant " << disc << '\n';
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (all) {
        writeGenusTable(os, "genus " + std::to_string(i + 1), parts[i]);
      } else {
        os << "  genus " << i + 1 << ": " << parts[i].size() << (parts[i].size() == 1 ? " class" : " classes")
           << ", first " << formText(parts[i].members.front()) << '\n';
      }
    }
  }
  return 0;
}

template <class Check>
int cmdPerPrime(const RunConfig& cfg, Check check, std::ostream& os) {
  requireOddPrimes(cfg.primes);
  std::vector<VerificationReport> reports;
  for (auto p : cfg.primes) reports.push_back(check(p));
  writeReports(os, reports, parseFormat(cfg.format), cfg.timing);
  return exitFor(reports);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.order = defaultOrder();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Exact q-series, ternary quadratic forms and identity verification", "ternary"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "table", "csv"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", cfg.output, "Write output to this file");
    sub->add_flag("--timing", cfg.timing, "Include elapsed times");
  };
  std::string primesText;
  auto primesOption = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", primesText, "Odd prime or comma-separated list of odd primes");
    if (required) opt->required();
  };

  std::vector<std::string> ids;
  bool all = false, list = false;
  auto* verify = app.add_subcommand("verify", "Verify catalogued series identities");
  verify->add_option("--id", ids, "Identity id (repeat or comma-separate)")->delimiter(',');
  verify->add_flag("--all", all, "Verify the whole catalog");
  verify->add_flag("--list", list, "List catalog ids and exit");
  verify->add_option("--order", cfg.order, "Truncation order")->check(CLI::PositiveNumber);
  common(verify);

  std::string formText;
  std::int64_t n = 0;
  int countMax = -1;
  auto* count = app.add_subcommand("count", "Representation counts of a positive definite form");
  count->add_option("--form", formText, "a,b,c,d,e,f (ternary) or a,b,c (binary)")->required();
  auto* nOpt = count->add_option("--n", n, "Number to represent");
  count->add_option("--max", countMax, "Print the theta series up to this order instead")->excludes(nOpt);
  common(count);

  int sMax = 0;
  auto* s = app.add_subcommand("s", "Print s(0..max), the sums of three squares counts");
  s->add_option("--max", sMax, "Largest n")->required()->check(CLI::NonNegativeNumber);
  common(s);

  std::int64_t disc = 0;
  bool allGenera = false;
  auto* genus = app.add_subcommand("genus", "TG1 and TG2 for an odd prime, or the genera of a discriminant");
  primesOption(genus, false);
  auto* discOpt = genus->add_option("--disc", disc, "Discriminant");
  genus->add_flag("--all", allGenera, "List every member of every genus");
  common(genus);

  // --max-n stays -1 unless given; each check then applies its own default.
  cfg.maxN = -1;
  auto addChecks = [&](const char* name, const char* help, std::int64_t defaultMax) {
    auto* sub = app.add_subcommand(name, help);
    primesOption(sub, true);
    sub->add_option("--max-n", cfg.maxN, "Largest n checked (default " + std::to_string(defaultMax) + ")")
        ->check(CLI::PositiveNumber);
    common(sub);
    return sub;
  };
  auto* prop54 = addChecks("prop54", "s(p^2 n) - p s(n) through the genera TG1 and TG2", 1000);
  auto* hs = addChecks("hs", "s(p^2 n) = (p+1-(-n|p)) s(n) - p s(n/p^2) by direct counting", 10000);
  auto* signature = addChecks("signature", "The bijection H and the vanishing of TG2 at 1,2 mod 4", 500);
  auto* vanishing = addChecks("vanishing", "Vanishing of TG1 and TG2 where (-n|p) = 1 (conjectural)", 2000);

  std::vector<const char*> argv = {"ternary"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << '\n';
      return 2;
    }
  }
  std::ostream& os = cfg.output.empty() ? out : file;

  try {
    if (!primesText.empty()) cfg.primes = parseInts(primesText);
    auto maxFor = [&](std::int64_t fallback) { return cfg.maxN > 0 ? cfg.maxN : fallback; };
    if (verify->parsed()) return cmdVerify(cfg, ids, all, list, os);
    if (count->parsed()) {
      if (countMax < 0 && nOpt->count() == 0) throw DomainError("give --n or --max");
      return cmdCount(cfg, formText, n, countMax, os);
    }
    if (s->parsed()) return cmdS(cfg, sMax, os);
    if (genus->parsed()) {
      if (discOpt->count() > 0) return cmdGenusDisc(cfg, disc, allGenera, os);
      if (cfg.primes.size() != 1) throw DomainError("genus takes one --p or a --disc");
      return cmdGenusPrime(cfg, cfg.primes.front(), os);
    }
    if (prop54->parsed()) {
      const auto m = maxFor(1000);
      return cmdPerPrime(cfg, [m](std::int64_t p) { return verifyProp54(p, m); }, os);
    }
    if (hs->parsed()) {
      const auto m = maxFor(10000);
      return cmdPerPrime(cfg, [m](std::int64_t p) { return verifyHS(p, m); }, os);
    }
    if (signature->parsed()) {
      const auto m = maxFor(500);
      return cmdPerPrime(cfg, [m](std::int64_t p) { return verifySignature(p, m); }, os);
    }
    if (vanishing->parsed()) {
      const auto m = maxFor(2000);
      return cmdPerPrime(cfg, [m](std::int64_t p) { return verifyVanishing(p, m); }, os);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SelectionError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ternary
