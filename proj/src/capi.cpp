#include "permrank.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cipher.hpp"
#include "codec.hpp"
#include "errors.hpp"
#include "inversion_stats.hpp"
#include "selftest.hpp"
#include "signed_perm.hpp"

struct pr_perm {
  permrank::SignedPerm value;
};

struct pr_system {
  permrank::NumberSystem value;
};

struct pr_key {
  permrank::CipherKey value;
};

struct pr_enum {
  permrank::FamilyIterator value;
};

namespace {

thread_local std::string g_last_error;

pr_status fail(pr_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
pr_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PR_OK;
  } catch (const permrank::FormatError& e) {
    return fail(PR_ERROR_FORMAT, e.what());
  } catch (const permrank::OverflowError& e) {
    return fail(PR_ERROR_OVERFLOW, e.what());
  } catch (const permrank::DomainError& e) {
    return fail(PR_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PR_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PR_ERROR_INTERNAL, e.what());
  }
}

pr_status invalid(const char* what) { return fail(PR_ERROR_INVALID_ARGUMENT, what); }

bool to_family(pr_family tag, permrank::Family& out) {
  switch (tag) {
    case PR_FAMILY_B: out = permrank::Family::B; return true;
    case PR_FAMILY_D: out = permrank::Family::D; return true;
    case PR_FAMILY_S: out = permrank::Family::S; return true;
    case PR_FAMILY_A: out = permrank::Family::A; return true;
    case PR_FAMILY_F: out = permrank::Family::F; return true;
  }
  return false;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

uint8_t* dup_buffer(const std::vector<std::uint8_t>& data) {
  // malloc(0) may return NULL; always hand back a releasable pointer.
  uint8_t* out = static_cast<uint8_t*>(std::malloc(data.empty() ? 1 : data.size()));
  if (out == nullptr) throw std::bad_alloc();
  if (!data.empty()) std::memcpy(out, data.data(), data.size());
  return out;
}

}  // namespace

extern "C" {

const char* pr_last_error(void) { return g_last_error.c_str(); }

void pr_string_free(char* text) { std::free(text); }

void pr_buffer_free(uint8_t* buffer) { std::free(buffer); }

/* ---- families ---------------------------------------------------------- */

int pr_family_min_size(pr_family family) {
  permrank::Family f;
  if (!to_family(family, f)) return -1;
  return permrank::family_min_size(f);
}

pr_status pr_family_order(pr_family family, int n, char** out_decimal) {
  if (out_decimal == nullptr) return invalid("out_decimal is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out_decimal = dup_string(permrank::family_order(f, n).to_decimal()); });
}

/* ---- signed permutations ----------------------------------------------- */

pr_status pr_perm_identity(int n, pr_perm** out) {
  if (out == nullptr) return invalid("out is null");
  return guarded([&] { *out = new pr_perm{permrank::SignedPerm::identity(n)}; });
}

pr_status pr_perm_from_window(const int32_t* window, size_t n, pr_perm** out) {
  if (window == nullptr || out == nullptr) return invalid("window or out is null");
  return guarded([&] {
    std::vector<std::int32_t> entries(window, window + n);
    *out = new pr_perm{permrank::SignedPerm::from_window(std::move(entries))};
  });
}

pr_status pr_perm_parse(const char* text, pr_perm** out) {
  if (text == nullptr || out == nullptr) return invalid("text or out is null");
  return guarded([&] { *out = new pr_perm{permrank::parse_window(text)}; });
}

void pr_perm_free(pr_perm* perm) { delete perm; }

int pr_perm_size(const pr_perm* perm) { return perm == nullptr ? 0 : perm->value.size(); }

pr_status pr_perm_window(const pr_perm* perm, int32_t* out_window) {
  if (perm == nullptr || out_window == nullptr) return invalid("perm or out_window is null");
  return guarded([&] {
    const auto window = perm->value.window();
    std::memcpy(out_window, window.data(), window.size() * sizeof(int32_t));
  });
}

pr_status pr_perm_format(const pr_perm* perm, char** out_text) {
  if (perm == nullptr || out_text == nullptr) return invalid("perm or out_text is null");
  return guarded([&] { *out_text = dup_string(permrank::format_window(perm->value)); });
}

pr_status pr_perm_image(const pr_perm* perm, int32_t j, int32_t* out_image) {
  if (perm == nullptr || out_image == nullptr) return invalid("perm or out_image is null");
  return guarded([&] { *out_image = perm->value(j); });
}

pr_status pr_perm_compose(const pr_perm* lhs, const pr_perm* rhs, pr_perm** out) {
  if (lhs == nullptr || rhs == nullptr || out == nullptr) return invalid("argument is null");
  return guarded([&] { *out = new pr_perm{lhs->value * rhs->value}; });
}

pr_status pr_perm_invert(const pr_perm* perm, pr_perm** out) {
  if (perm == nullptr || out == nullptr) return invalid("perm or out is null");
  return guarded([&] { *out = new pr_perm{perm->value.inverse()}; });
}

pr_status pr_perm_is_member(const pr_perm* perm, pr_family family, int* out_member) {
  if (perm == nullptr || out_member == nullptr) return invalid("perm or out_member is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out_member = permrank::is_member(perm->value, f) ? 1 : 0; });
}

pr_status pr_perm_random(pr_family family, int n, uint64_t seed, pr_perm** out) {
  if (out == nullptr) return invalid("out is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out = new pr_perm{permrank::random_element(f, n, seed)}; });
}

/* ---- inversion statistics ---------------------------------------------- */

pr_status pr_perm_inv(const pr_perm* perm, uint64_t* out_inv) {
  if (perm == nullptr || out_inv == nullptr) return invalid("perm or out_inv is null");
  return guarded([&] { *out_inv = permrank::inv(perm->value); });
}

pr_status pr_perm_inv_i(const pr_perm* perm, int i, uint64_t* out_inv) {
  if (perm == nullptr || out_inv == nullptr) return invalid("perm or out_inv is null");
  return guarded([&] { *out_inv = permrank::inv_i(perm->value, i); });
}

pr_status pr_perm_inv_vector(const pr_perm* perm, uint64_t* out_vector) {
  if (perm == nullptr || out_vector == nullptr) return invalid("perm or out_vector is null");
  return guarded([&] {
    const auto vector = permrank::inv_vector(perm->value);
    std::memcpy(out_vector, vector.data(), vector.size() * sizeof(uint64_t));
  });
}

/* ---- number systems ----------------------------------------------------- */

pr_status pr_system_builtin(pr_family family, int n, pr_system** out) {
  if (out == nullptr) return invalid("out is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out = new pr_system{permrank::NumberSystem::builtin(f, n)}; });
}

pr_status pr_system_from_radices(int offset, const uint64_t* radices, size_t count,
                                 pr_system** out) {
  if (radices == nullptr || out == nullptr) return invalid("radices or out is null");
  return guarded([&] {
    permrank::RadixSequence sequence;
    sequence.offset = offset;
    sequence.radices.assign(radices, radices + count);
    *out = new pr_system{permrank::NumberSystem(std::move(sequence))};
  });
}

void pr_system_free(pr_system* system) { delete system; }

size_t pr_system_positions(const pr_system* system) {
  return system == nullptr ? 0 : system->value.positions();
}

pr_status pr_system_radix(const pr_system* system, size_t position, uint64_t* out_radix) {
  if (system == nullptr || out_radix == nullptr) return invalid("system or out_radix is null");
  return guarded([&] { *out_radix = system->value.radix(position); });
}

pr_status pr_system_weight(const pr_system* system, size_t position, char** out_decimal) {
  if (system == nullptr || out_decimal == nullptr) return invalid("system or out_decimal is null");
  return guarded([&] { *out_decimal = dup_string(system->value.weight(position).to_decimal()); });
}

pr_status pr_validate_system(const char* const* weights_decimal, size_t weight_count,
                             const uint64_t* radices, size_t radix_count, int* out_valid) {
  if (weights_decimal == nullptr || radices == nullptr || out_valid == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    std::vector<permrank::Natural> weights;
    weights.reserve(weight_count);
    for (size_t k = 0; k < weight_count; ++k) {
      if (weights_decimal[k] == nullptr) throw std::invalid_argument("weight string is null");
      weights.push_back(permrank::Natural::from_decimal(weights_decimal[k]));
    }
    *out_valid = permrank::validate_system(weights, {radices, radix_count}) ? 1 : 0;
  });
}

pr_status pr_encode(const pr_system* system, const char* value_decimal, char** out_digits) {
  if (system == nullptr || value_decimal == nullptr || out_digits == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    const permrank::Natural value = permrank::Natural::from_decimal(value_decimal);
    *out_digits =
        dup_string(permrank::format_digit_string(permrank::encode_natural(system->value, value)));
  });
}

pr_status pr_decode(const pr_system* system, const char* digits, char** out_decimal) {
  if (system == nullptr || digits == nullptr || out_decimal == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    const permrank::DigitString parsed = permrank::parse_digit_string(system->value, digits);
    *out_decimal = dup_string(permrank::decode_digits(system->value, parsed).to_decimal());
  });
}

pr_status pr_increment(const pr_system* system, const char* digits, char** out_digits) {
  if (system == nullptr || digits == nullptr || out_digits == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    const permrank::DigitString parsed = permrank::parse_digit_string(system->value, digits);
    *out_digits =
        dup_string(permrank::format_digit_string(permrank::increment_digits(system->value, parsed)));
  });
}

/* ---- rank / unrank ------------------------------------------------------ */

pr_status pr_rank(const pr_perm* perm, pr_family family, char** out_decimal) {
  if (perm == nullptr || out_decimal == nullptr) return invalid("perm or out_decimal is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out_decimal = dup_string(permrank::rank(perm->value, f).to_decimal()); });
}

pr_status pr_digits(const pr_perm* perm, pr_family family, char** out_digits) {
  if (perm == nullptr || out_digits == nullptr) return invalid("perm or out_digits is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] {
    *out_digits = dup_string(permrank::format_digit_string(permrank::family_digits(perm->value, f)));
  });
}

pr_status pr_unrank(pr_family family, int n, const char* rank_decimal, pr_perm** out) {
  if (rank_decimal == nullptr || out == nullptr) return invalid("rank_decimal or out is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] {
    const permrank::Natural rank = permrank::Natural::from_decimal(rank_decimal);
    *out = new pr_perm{permrank::unrank(rank, n, f)};
  });
}

pr_status pr_unrank_digits(pr_family family, int n, const char* digits, pr_perm** out) {
  if (digits == nullptr || out == nullptr) return invalid("digits or out is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] {
    const permrank::NumberSystem system = permrank::NumberSystem::builtin(f, n);
    const permrank::DigitString parsed = permrank::parse_digit_string(system, digits);
    *out = new pr_perm{permrank::unrank_digits(parsed, n, f)};
  });
}

/* ---- enumeration -------------------------------------------------------- */

pr_status pr_enum_create(pr_family family, int n, pr_enum** out) {
  if (out == nullptr) return invalid("out is null");
  permrank::Family f;
  if (!to_family(family, f)) return invalid("unknown family tag");
  return guarded([&] { *out = new pr_enum{permrank::FamilyIterator(f, n)}; });
}

pr_status pr_enum_next(pr_enum* cursor, pr_perm** out_perm) {
  if (cursor == nullptr || out_perm == nullptr) return invalid("cursor or out_perm is null");
  return guarded([&] {
    auto next = cursor->value.next();
    *out_perm = next ? new pr_perm{std::move(*next)} : nullptr;
  });
}

void pr_enum_free(pr_enum* cursor) { delete cursor; }

/* ---- cipher -------------------------------------------------------------- */

pr_status pr_key_generate(int n, uint64_t seed, pr_key** out) {
  if (out == nullptr) return invalid("out is null");
  return guarded([&] { *out = new pr_key{permrank::CipherKey::generate(n, seed)}; });
}

pr_status pr_key_from_perm(const pr_perm* perm, pr_key** out) {
  if (perm == nullptr || out == nullptr) return invalid("perm or out is null");
  return guarded([&] { *out = new pr_key{permrank::CipherKey(perm->value)}; });
}

pr_status pr_key_perm(const pr_key* key, pr_perm** out) {
  if (key == nullptr || out == nullptr) return invalid("key or out is null");
  return guarded([&] { *out = new pr_perm{key->value.perm()}; });
}

void pr_key_free(pr_key* key) { delete key; }

pr_status pr_encrypt_block(const pr_key* key, const char* m_decimal, char** out_decimal) {
  if (key == nullptr || m_decimal == nullptr || out_decimal == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    const permrank::Natural m = permrank::Natural::from_decimal(m_decimal);
    *out_decimal = dup_string(permrank::encrypt_block(m, key->value).to_decimal());
  });
}

pr_status pr_decrypt_block(const pr_key* key, const char* c_decimal, char** out_decimal) {
  if (key == nullptr || c_decimal == nullptr || out_decimal == nullptr)
    return invalid("argument is null");
  return guarded([&] {
    const permrank::Natural c = permrank::Natural::from_decimal(c_decimal);
    *out_decimal = dup_string(permrank::decrypt_block(c, key->value).to_decimal());
  });
}

pr_status pr_encrypt(const pr_key* key, const uint8_t* data, size_t size, uint8_t** out,
                     size_t* out_size) {
  if (key == nullptr || out == nullptr || out_size == nullptr) return invalid("argument is null");
  if (data == nullptr && size != 0) return invalid("data is null");
  return guarded([&] {
    const auto ciphertext = permrank::encrypt_stream({data, size}, key->value);
    *out = dup_buffer(ciphertext);
    *out_size = ciphertext.size();
  });
}

pr_status pr_decrypt(const pr_key* key, const uint8_t* data, size_t size, uint8_t** out,
                     size_t* out_size) {
  if (key == nullptr || out == nullptr || out_size == nullptr) return invalid("argument is null");
  if (data == nullptr && size != 0) return invalid("data is null");
  return guarded([&] {
    const auto plaintext = permrank::decrypt_stream({data, size}, key->value);
    *out = dup_buffer(plaintext);
    *out_size = plaintext.size();
  });
}

/* ---- selftest ------------------------------------------------------------ */

pr_status pr_selftest(int* out_ok, char** out_report) {
  if (out_ok == nullptr || out_report == nullptr) return invalid("out_ok or out_report is null");
  return guarded([&] {
    const auto checks = permrank::run_selftest();
    bool ok = true;
    std::string report;
    for (const auto& check : checks) {
      ok = ok && check.passed;
      report += check.passed ? "ok  " : "FAIL";
      report += '\t';
      report += check.name;
      report += '\n';
    }
    *out_ok = ok ? 1 : 0;
    *out_report = dup_string(report);
  });
}

}  // extern "C"
