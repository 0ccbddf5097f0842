#include "compactum/rational.hpp"

#include <charconv>

#include "compactum/error.hpp"

namespace compactum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonAssociativeTable: return "NonAssociativeTable";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::UnknownGroupKind: return "UnknownGroupKind";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::InvalidRounds: return "InvalidRounds";
    case ErrorCode::ExhaustedSequence: return "ExhaustedSequence";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::InvalidSlice: return "InvalidSlice";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::UncertifiedM: return "UncertifiedM";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidPrimitive: return "InvalidPrimitive";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
  }
  return "Unknown";
}

Rational q(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::OutOfRange, "zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string to_text(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw Error(ErrorCode::ParseError,
                "not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator: '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(|r| * scale) half away from zero
  mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class den = r.get_den() * 2;
  mpz_class scaled = num / den;
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  if (r < 0 && scaled != 0) body.insert(0, "-");
  return body;
}

}  // namespace compactum
