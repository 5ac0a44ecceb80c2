// permrank command line tool. Talks to the library exclusively through the
// public C interface.
//
// Exit codes: 0 success, 1 selftest failure, 2 usage error, 3 domain error,
// 4 I/O or format error.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <permrank.h>

namespace {

int exit_code(pr_status status) {
  switch (status) {
    case PR_OK: return 0;
    case PR_ERROR_INVALID_ARGUMENT: return 2;
    case PR_ERROR_FORMAT: return 4;
    case PR_ERROR_DOMAIN: return 3;
    case PR_ERROR_OVERFLOW: return 3;
    case PR_ERROR_INTERNAL: return 1;
  }
  return 1;
}

int report(pr_status status) {
  std::cerr << "permrank: " << pr_last_error() << "\n";
  return exit_code(status);
}

int io_error(const std::string& what) {
  std::cerr << "permrank: " << what << "\n";
  return 4;
}

pr_family to_family(const std::string& tag) {
  switch (tag.empty() ? '?' : tag[0]) {
    case 'B': return PR_FAMILY_B;
    case 'D': return PR_FAMILY_D;
    case 'S': return PR_FAMILY_S;
    case 'A': return PR_FAMILY_A;
    default: return PR_FAMILY_F;
  }
}

std::string trimmed(const std::string& line) {
  std::size_t begin = 0;
  std::size_t end = line.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  return line.substr(begin, end - begin);
}

// Records come from standard input when it is piped and carries data;
// otherwise from the positional argument.
std::vector<std::string> gather_inputs(const std::string& arg) {
  std::vector<std::string> lines;
  if (isatty(STDIN_FILENO) == 0) {
    std::string line;
    while (std::getline(std::cin, line)) {
      const std::string body = trimmed(line);
      if (!body.empty()) lines.push_back(body);
    }
  }
  if (lines.empty() && !arg.empty()) lines.push_back(trimmed(arg));
  return lines;
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { pr_string_free(text); }
};

struct OwnedPerm {
  pr_perm* perm = nullptr;
  ~OwnedPerm() { pr_perm_free(perm); }
};

bool read_binary(const std::string& path, std::vector<std::uint8_t>& out) {
  FILE* file = path == "-" ? stdin : std::fopen(path.c_str(), "rb");
  if (file == nullptr) return false;
  std::uint8_t buffer[1 << 16];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof(buffer), file)) > 0)
    out.insert(out.end(), buffer, buffer + got);
  const bool ok = std::ferror(file) == 0;
  if (file != stdin) std::fclose(file);
  return ok;
}

bool write_binary(const std::string& path, const std::uint8_t* data, std::size_t size) {
  FILE* file = path == "-" ? stdout : std::fopen(path.c_str(), "wb");
  if (file == nullptr) return false;
  const bool ok = std::fwrite(data, 1, size, file) == size && std::fflush(file) == 0;
  if (file != stdout) std::fclose(file);
  return ok;
}

int run_rank(const std::string& family, const std::string& arg) {
  for (const std::string& line : gather_inputs(arg)) {
    OwnedPerm perm;
    if (pr_status s = pr_perm_parse(line.c_str(), &perm.perm); s != PR_OK) return report(s);
    OwnedString rank;
    if (pr_status s = pr_rank(perm.perm, to_family(family), &rank.text); s != PR_OK)
      return report(s);
    std::cout << rank.text << "\n";
  }
  return 0;
}

int run_unrank(const std::string& family, int n, const std::string& arg) {
  for (const std::string& line : gather_inputs(arg)) {
    OwnedPerm perm;
    if (pr_status s = pr_unrank(to_family(family), n, line.c_str(), &perm.perm); s != PR_OK)
      return report(s);
    OwnedString window;
    if (pr_status s = pr_perm_format(perm.perm, &window.text); s != PR_OK) return report(s);
    std::cout << window.text << "\n";
  }
  return 0;
}

int run_stats(const std::string& family, const std::string& arg) {
  for (const std::string& line : gather_inputs(arg)) {
    OwnedPerm perm;
    if (pr_status s = pr_perm_parse(line.c_str(), &perm.perm); s != PR_OK) return report(s);
    OwnedString window;
    if (pr_status s = pr_perm_format(perm.perm, &window.text); s != PR_OK) return report(s);
    std::uint64_t total = 0;
    if (pr_status s = pr_perm_inv(perm.perm, &total); s != PR_OK) return report(s);
    std::vector<std::uint64_t> vector(static_cast<std::size_t>(pr_perm_size(perm.perm)));
    if (pr_status s = pr_perm_inv_vector(perm.perm, vector.data()); s != PR_OK) return report(s);
    OwnedString digits;
    if (pr_status s = pr_digits(perm.perm, to_family(family), &digits.text); s != PR_OK)
      return report(s);

    std::cout << window.text << '\t' << total << '\t';
    for (std::size_t i = 0; i < vector.size(); ++i) {
      if (i != 0) std::cout << ',';
      std::cout << vector[i];
    }
    std::cout << '\t' << digits.text << "\n";
  }
  return 0;
}

int run_ns(bool encode, const std::string& family, int n, const std::string& arg) {
  pr_system* system = nullptr;
  if (pr_status s = pr_system_builtin(to_family(family), n, &system); s != PR_OK)
    return report(s);
  int rc = 0;
  for (const std::string& line : gather_inputs(arg)) {
    OwnedString out;
    const pr_status s = encode ? pr_encode(system, line.c_str(), &out.text)
                               : pr_decode(system, line.c_str(), &out.text);
    if (s != PR_OK) {
      rc = report(s);
      break;
    }
    std::cout << out.text << "\n";
  }
  pr_system_free(system);
  return rc;
}

int run_enumerate(const std::string& family, int n) {
  OwnedString order;
  if (pr_status s = pr_family_order(to_family(family), n, &order.text); s != PR_OK)
    return report(s);
  errno = 0;
  char* end = nullptr;
  const unsigned long long count = std::strtoull(order.text, &end, 10);
  if (errno != 0 || *end != '\0') {
    std::cerr << "permrank: group order " << order.text << " is too large to enumerate\n";
    return 3;
  }
  for (unsigned long long m = 0; m < count; ++m) {
    const std::string rank = std::to_string(m);
    OwnedPerm perm;
    if (pr_status s = pr_unrank(to_family(family), n, rank.c_str(), &perm.perm); s != PR_OK)
      return report(s);
    OwnedString window;
    if (pr_status s = pr_perm_format(perm.perm, &window.text); s != PR_OK) return report(s);
    OwnedString digits;
    if (pr_status s = pr_digits(perm.perm, to_family(family), &digits.text); s != PR_OK)
      return report(s);
    std::cout << rank << '\t' << window.text << '\t' << digits.text << "\n";
  }
  return 0;
}

int load_key(const std::string& key_text, const std::string& key_file, pr_key** out) {
  if (key_text.empty() && key_file.empty()) {
    std::cerr << "permrank: one of --key or --key-file is required\n";
    return 2;
  }
  std::string window = key_text;
  if (!key_file.empty()) {
    std::vector<std::uint8_t> bytes;
    if (!read_binary(key_file, bytes)) return io_error("cannot read key file " + key_file);
    const std::string content(bytes.begin(), bytes.end());
    window = trimmed(content.substr(0, content.find('\n')));
  }
  OwnedPerm perm;
  if (pr_status s = pr_perm_parse(window.c_str(), &perm.perm); s != PR_OK) return report(s);
  if (pr_status s = pr_key_from_perm(perm.perm, out); s != PR_OK) return report(s);
  return 0;
}

int run_keygen(int n, std::uint64_t seed, const std::string& out_path) {
  pr_key* key = nullptr;
  if (pr_status s = pr_key_generate(n, seed, &key); s != PR_OK) return report(s);
  OwnedPerm perm;
  pr_status s = pr_key_perm(key, &perm.perm);
  pr_key_free(key);
  if (s != PR_OK) return report(s);
  OwnedString window;
  if (pr_status s2 = pr_perm_format(perm.perm, &window.text); s2 != PR_OK) return report(s2);
  const std::string line = std::string(window.text) + "\n";
  if (out_path.empty()) {
    std::cout << line;
    return 0;
  }
  if (!write_binary(out_path, reinterpret_cast<const std::uint8_t*>(line.data()), line.size()))
    return io_error("cannot write " + out_path);
  return 0;
}

int run_crypt(bool encrypt, const std::string& key_text, const std::string& key_file,
              const std::string& in_path, const std::string& out_path) {
  pr_key* key = nullptr;
  if (int rc = load_key(key_text, key_file, &key); rc != 0) return rc;

  std::vector<std::uint8_t> input;
  if (!read_binary(in_path, input)) {
    pr_key_free(key);
    return io_error("cannot read " + in_path);
  }

  std::uint8_t* output = nullptr;
  std::size_t output_size = 0;
  const pr_status s = encrypt
                          ? pr_encrypt(key, input.data(), input.size(), &output, &output_size)
                          : pr_decrypt(key, input.data(), input.size(), &output, &output_size);
  pr_key_free(key);
  if (s != PR_OK) return report(s);

  const bool written = write_binary(out_path, output, output_size);
  pr_buffer_free(output);
  return written ? 0 : io_error("cannot write " + out_path);
}

int run_selftest() {
  int ok = 0;
  OwnedString report_text;
  if (pr_status s = pr_selftest(&ok, &report_text.text); s != PR_OK) return report(s);
  std::cout << report_text.text;
  return ok == 1 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank/unrank codecs for signed permutation families, mixed-radix "
               "number systems, and a toy permutation cipher"};
  app.require_subcommand(1);
  const std::vector<std::string> family_tags = {"B", "D", "S", "A", "F"};

  int rc = 0;

  // ns encode|decode
  auto* ns = app.add_subcommand("ns", "convert between naturals and digit strings");
  ns->require_subcommand(1);
  std::string ns_family = "B";
  int ns_n = 0;
  std::string ns_arg;
  auto* ns_encode = ns->add_subcommand("encode", "natural -> digit string");
  auto* ns_decode = ns->add_subcommand("decode", "digit string -> natural");
  for (auto* cmd : {ns_encode, ns_decode}) {
    cmd->add_option("--family", ns_family, "group family")
        ->required()
        ->check(CLI::IsMember(family_tags));
    cmd->add_option("--n", ns_n, "window size")->required();
    cmd->add_option("value", ns_arg, "value (standard input wins when piped)");
  }
  ns_encode->callback([&] { rc = run_ns(true, ns_family, ns_n, ns_arg); });
  ns_decode->callback([&] { rc = run_ns(false, ns_family, ns_n, ns_arg); });

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "window notation -> rank");
  std::string rank_family;
  std::string rank_arg;
  rank_cmd->add_option("--family", rank_family, "group family")
      ->required()
      ->check(CLI::IsMember(family_tags));
  rank_cmd->add_option("window", rank_arg, "window like [-2,1]");
  rank_cmd->callback([&] { rc = run_rank(rank_family, rank_arg); });

  // unrank
  auto* unrank_cmd = app.add_subcommand("unrank", "rank -> window notation");
  std::string unrank_family;
  int unrank_n = 0;
  std::string unrank_arg;
  unrank_cmd->add_option("--family", unrank_family, "group family")
      ->required()
      ->check(CLI::IsMember(family_tags));
  unrank_cmd->add_option("--n", unrank_n, "window size")->required();
  unrank_cmd->add_option("rank", unrank_arg, "rank in [0, |G_n|)");
  unrank_cmd->callback([&] { rc = run_unrank(unrank_family, unrank_n, unrank_arg); });

  // stats
  auto* stats_cmd = app.add_subcommand(
      "stats", "inversion statistics of a window: window, inv, inv vector, digits");
  std::string stats_family = "B";
  std::string stats_arg;
  stats_cmd->add_option("--family", stats_family, "family for the digit column")
      ->check(CLI::IsMember(family_tags));
  stats_cmd->add_option("window", stats_arg, "window like [-2,1]");
  stats_cmd->callback([&] { rc = run_stats(stats_family, stats_arg); });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "table of rank, window, digits");
  std::string enum_family;
  int enum_n = 0;
  enum_cmd->add_option("--family", enum_family, "group family")
      ->required()
      ->check(CLI::IsMember(family_tags));
  enum_cmd->add_option("--n", enum_n, "window size")->required();
  enum_cmd->callback([&] { rc = run_enumerate(enum_family, enum_n); });

  // crypt keygen|enc|dec
  auto* crypt = app.add_subcommand("crypt", "toy permutation block cipher");
  crypt->require_subcommand(1);
  int crypt_n = 0;
  std::uint64_t crypt_seed = 0;
  std::string crypt_out_path;
  auto* keygen = crypt->add_subcommand("keygen", "derive a key window from a seed");
  keygen->add_option("--n", crypt_n, "window size")->required();
  keygen->add_option("--seed", crypt_seed, "key seed")->required();
  keygen->add_option("--out", crypt_out_path, "write the key here instead of stdout");
  keygen->callback([&] { rc = run_keygen(crypt_n, crypt_seed, crypt_out_path); });

  std::string crypt_key;
  std::string crypt_key_file;
  std::string crypt_in = "-";
  std::string crypt_io_out = "-";
  auto* enc = crypt->add_subcommand("enc", "encrypt a file");
  auto* dec = crypt->add_subcommand("dec", "decrypt a file");
  for (auto* cmd : {enc, dec}) {
    auto* key_opt = cmd->add_option("--key", crypt_key, "key window like [-2,1]");
    auto* key_file_opt = cmd->add_option("--key-file", crypt_key_file, "file holding the key window");
    key_opt->excludes(key_file_opt);
    cmd->add_option("--in", crypt_in, "input path, - for stdin");
    cmd->add_option("--out", crypt_io_out, "output path, - for stdout");
  }
  enc->callback([&] { rc = run_crypt(true, crypt_key, crypt_key_file, crypt_in, crypt_io_out); });
  dec->callback([&] { rc = run_crypt(false, crypt_key, crypt_key_file, crypt_in, crypt_io_out); });

  // selftest
  auto* selftest_cmd =
      app.add_subcommand("selftest", "oracle-equivalence and bijection sweeps, n <= 4");
  selftest_cmd->callback([&] { rc = run_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
