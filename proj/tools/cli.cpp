#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "spirale/analysis.hpp"
#include "spirale/cipher.hpp"
#include "spirale/error.hpp"
#include "spirale/keygen.hpp"
#include "spirale/keystream.hpp"
#include "spirale/permutation.hpp"
#include "spirale/table.hpp"

namespace spirale::cli {

namespace {

struct Options {
  std::string alphabet_path;
  std::string key;
  std::string keys;
  std::string in_path = "-";
  std::string out_path = "-";
  std::string extracts_path;
  std::string format = "tsv";
  std::string mode;
  std::size_t length = 0;
  std::size_t group = 0;
  std::size_t lag = 1;
  std::size_t ngram = 3;
  std::size_t flip = 1;
  std::size_t horizon = 0;
  bool dump_longkey = false;
  bool correct = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  Alphabet alphabet() const {
    std::string path = opt_.alphabet_path;
    if (path.empty()) {
      if (const char* env = std::getenv("SPIRALE_ALPHABET")) path = env;
    }
    if (path.empty() || path == "builtin:26") return Alphabet::latin26();
    if (path == "builtin:36") return Alphabet::alphanumeric36();
    if (path == "builtin:53") return Alphabet::extended53();
    return Alphabet::parse_auto(read_file(path));
  }

  std::string read_input(const std::string& path) const {
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    return read_file(path);
  }

  void write_output(const std::string& text) const {
    if (opt_.out_path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + opt_.out_path);
    f << text;
    if (!f) throw Error(ErrorCode::IoError, "write failed for " + opt_.out_path);
  }

  void permute() {
    auto a = alphabet();
    auto perm = permute_alphabet(a, PermutationKey::from_text(a, opt_.key));
    out_ << join_symbols(a, perm.order()) << '\n';
    for (std::uint32_t s = 0; s < a.size(); ++s) {
      if (s) out_ << ' ';
      out_ << perm.position_of(Symbol(s)) + 1;
    }
    out_ << '\n';
  }

  void table() {
    if (opt_.format != "tsv") {
      throw Error(ErrorCode::UsageError, "unsupported table format '" + opt_.format + "'");
    }
    auto a = alphabet();
    auto parts = split_keys(opt_.keys);
    if (parts.size() != 2) {
      throw Error(ErrorCode::UsageError, "--keys expects K1,K2 for the table");
    }
    auto t = CipheringTable::build(a, PermutationKey::from_text(a, parts[0]),
                                   PermutationKey::from_text(a, parts[1]));
    out_ << t.to_tsv();
  }

  void keystream() {
    auto a = alphabet();
    Spirale cipher(a, KeySet::parse(a, opt_.keys));
    auto stream = opt_.dump_longkey ? cipher.long_key() : cipher.keystream(opt_.length);
    out_ << group_symbols(a, stream, opt_.group) << '\n';
  }

  void encrypt() {
    auto a = alphabet();
    Spirale cipher(a, KeySet::parse(a, opt_.keys));
    auto plain = normalize_text(a, read_input(opt_.in_path));
    write_output(group_symbols(a, cipher.encrypt(plain), opt_.group) + "\n");
  }

  void decrypt() {
    auto a = alphabet();
    Spirale cipher(a, KeySet::parse(a, opt_.keys));
    auto text = read_input(opt_.in_path);
    bool space_is_symbol = a.find(" ").has_value();
    std::erase_if(text, [&](char c) {
      return c == '\n' || c == '\r' || (c == ' ' && !space_is_symbol);
    });
    auto encoded = a.encode(text);
    write_output(group_symbols(a, cipher.decrypt(encoded), opt_.group) + "\n");
  }

  void derive_keys() {
    auto a = alphabet();
    std::vector<std::string> lines;
    std::istringstream src(read_input(opt_.extracts_path));
    for (std::string line; std::getline(src, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
    auto keys = derive_keys_from_extracts(BookExtracts::from_lines(a, lines));
    if (opt_.correct) keys = frequency_correct(a, keys);
    out_ << KeySet(keys).to_string(a) << '\n';
  }

  void analyze() {
    auto a = alphabet();
    if (opt_.mode == "errprop") {
      error_profile(a);
      return;
    }
    auto text = normalize_text(a, read_input(opt_.in_path));
    if (opt_.mode == "freq") {
      auto h = frequency_histogram(a, text);
      for (std::uint32_t s = 0; s < a.size(); ++s) {
        out_ << a.token(Symbol(s)) << '\t' << h[s] << '\n';
      }
    } else if (opt_.mode == "ic") {
      out_ << fixed(index_of_coincidence(text)) << '\n';
    } else if (opt_.mode == "chi2") {
      out_ << fixed(chi_square_uniform(frequency_histogram(a, text))) << '\n';
    } else if (opt_.mode == "autocorr") {
      out_ << fixed(autocorrelation_coincidence(text, opt_.lag)) << '\n';
    } else if (opt_.mode == "ngrams") {
      for (const auto& r : repeated_ngrams(text, opt_.ngram)) {
        out_ << a.decode(r.gram) << '\t' << r.positions.size() << '\t'
             << join_numbers(r.positions) << '\t' << join_numbers(r.gaps) << '\n';
      }
    } else {
      throw Error(ErrorCode::UsageError, "unknown analysis mode '" + opt_.mode + "'");
    }
  }

 private:
  void error_profile(const Alphabet& a) {
    if (opt_.keys.empty()) {
      throw Error(ErrorCode::UsageError, "--mode errprop requires --keys");
    }
    Spirale cipher(a, KeySet::parse(a, opt_.keys));
    auto gen = cipher.generator();
    auto horizon = opt_.horizon ? opt_.horizon : 3 * cipher.lags().long_lag;
    auto diff = error_propagation_profile(gen, opt_.flip, horizon);
    out_ << join_numbers(std::vector<std::size_t>(diff.begin(), diff.end())) << '\n';
  }

  static std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  static std::vector<std::string> split_keys(const std::string& list) {
    std::vector<std::string> parts;
    std::istringstream ss(list);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    return parts;
  }

  static std::string join_symbols(const Alphabet& a, const SymbolString& s) {
    if (a.single_glyph_tokens()) return a.decode(s);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += a.token(s[i]);
    }
    return out;
  }

  static std::string join_numbers(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(v[i]);
    }
    return out;
  }

  static std::string fixed(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(6) << v;
    return ss.str();
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

void add_alphabet(CLI::App* cmd, Options& opt) {
  cmd->add_option("--alphabet", opt.alphabet_path,
                  "Alphabet file (single line or one token per line), or "
                  "builtin:26|36|53");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Spirale one-time-pad hand cipher", "spirale"};
  app.require_subcommand(1);

  auto* permute = app.add_subcommand("permute", "Permute the alphabet with a key");
  permute->add_option("--key", opt.key, "Permutation key")->required();
  add_alphabet(permute, opt);

  auto* table = app.add_subcommand("table", "Dump the ciphering table");
  table->add_option("--keys", opt.keys, "K1,K2")->required();
  table->add_option("--format", opt.format, "Output format (tsv)");
  add_alphabet(table, opt);

  auto* keystream = app.add_subcommand("keystream", "Print the keystream");
  keystream->add_option("--keys", opt.keys, "K1,K2,K3,K4")->required();
  auto* length = keystream->add_option("--length", opt.length, "Number of symbols");
  auto* dump = keystream->add_flag("--dump-longkey", opt.dump_longkey,
                                   "Print only the long key");
  length->excludes(dump);
  keystream->add_option("--group", opt.group, "Insert a space every n symbols");
  add_alphabet(keystream, opt);

  for (const char* name : {"encrypt", "decrypt"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " a message");
    cmd->add_option("--keys", opt.keys, "K1,K2,K3,K4")->required();
    cmd->add_option("--in", opt.in_path, "Input file ('-' for stdin)");
    cmd->add_option("--out", opt.out_path, "Output file ('-' for stdout)");
    cmd->add_option("--group", opt.group, "Insert a space every n symbols");
    add_alphabet(cmd, opt);
  }

  auto* derive = app.add_subcommand("derive-keys", "Derive 4 keys from book extracts");
  derive->add_option("--extracts", opt.extracts_path, "File with 4 extract lines")
      ->required();
  derive->add_flag("--correct", opt.correct, "Apply the frequency correction");
  add_alphabet(derive, opt);

  auto* analyze = app.add_subcommand("analyze", "Statistics over a symbol sequence");
  analyze->add_option("--mode", opt.mode, "freq|ic|chi2|autocorr|ngrams|errprop")
      ->required()
      ->check(CLI::IsMember({"freq", "ic", "chi2", "autocorr", "ngrams", "errprop"}));
  analyze->add_option("--in", opt.in_path, "Input file ('-' for stdin)");
  analyze->add_option("--lag", opt.lag, "Lag for autocorr");
  analyze->add_option("--n", opt.ngram, "n-gram size for ngrams");
  analyze->add_option("--keys", opt.keys, "K1,K2,K3,K4 for errprop");
  analyze->add_option("--flip", opt.flip, "1-based long-key position to flip (errprop)");
  analyze->add_option("--horizon", opt.horizon, "Last position to compare (errprop)");
  add_alphabet(analyze, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR " << code_name(ErrorCode::UsageError) << ": " << e.what() << '\n';
    return 2;
  }

  try {
    if (keystream->parsed() && !opt.dump_longkey && length->count() == 0) {
      throw Error(ErrorCode::UsageError, "keystream needs --length or --dump-longkey");
    }
    Runner runner(opt, in, out);
    if (permute->parsed()) runner.permute();
    else if (table->parsed()) runner.table();
    else if (keystream->parsed()) runner.keystream();
    else if (app.got_subcommand("encrypt")) runner.encrypt();
    else if (app.got_subcommand("decrypt")) runner.decrypt();
    else if (derive->parsed()) runner.derive_keys();
    else if (analyze->parsed()) runner.analyze();
  } catch (const Error& e) {
    err << "ERROR " << code_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::UsageError ? 2 : 1;
  }
  return 0;
}

}  // namespace spirale::cli
