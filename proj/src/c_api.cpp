#include <arithlat/arithlat.h>

#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

struct al_config {
  arithlat::RunConfig cfg;
};

struct al_algebra {
  arithlat::QuaternionAlgebra alg;
};

namespace {

thread_local int last_code = 0;
thread_local std::string last_message;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

al_status status_of(arithlat::ErrorCode code) {
  using arithlat::ErrorCode;
  return (code == ErrorCode::InvalidInput || code == ErrorCode::InvalidPlace) ? AL_INVALID_INPUT : AL_DOMAIN_ERROR;
}

al_status record(int code, const std::string& message, al_status status) {
  last_code = code;
  last_message = message;
  return status;
}

// Runs f, translating exceptions into a status and the thread-local error.
template <class F>
al_status guarded(F&& f) {
  try {
    last_code = 0;
    last_message.clear();
    return f();
  } catch (const arithlat::Error& e) {
    return record(static_cast<int>(e.code()), e.what(), status_of(e.code()));
  } catch (const std::exception& e) {
    return record(-1, e.what(), AL_INTERNAL);
  }
}

al_status null_argument(const char* what) {
  return record(static_cast<int>(arithlat::ErrorCode::InvalidInput), std::string("null argument: ") + what,
                AL_INVALID_INPUT);
}

}  // namespace

extern "C" {

const char* al_version(void) { return "1.0.0"; }

al_config* al_config_new(void) {
  try {
    return new al_config();
  } catch (...) {
    return nullptr;
  }
}

void al_config_free(al_config* cfg) { delete cfg; }

al_status al_config_set(al_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return null_argument("al_config_set");
  return guarded([&] {
    cfg->cfg.set(key, value);
    return AL_OK;
  });
}

al_status al_config_load_file(al_config* cfg, const char* path) {
  if (!cfg || !path) return null_argument("al_config_load_file");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) arithlat::fail(arithlat::ErrorCode::InvalidInput, std::string("cannot read config ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    arithlat::load_config_text(cfg->cfg, buf.str());
    return AL_OK;
  });
}

al_status al_run(const al_config* cfg, const char* noun, char** out_json) {
  if (!cfg || !noun || !out_json) return null_argument("al_run");
  *out_json = nullptr;
  const al_status st = guarded([&] {
    const arithlat::CommandResult res = arithlat::run_command(noun, cfg->cfg);
    *out_json = dup_string(res.doc.dump(2) + "\n");
    return res.pass ? AL_OK : AL_CHECK_FAILED;
  });
  if (st != AL_OK && st != AL_CHECK_FAILED) {
    const char* name = last_code > 0 ? arithlat::error_name(static_cast<arithlat::ErrorCode>(last_code)) : "Internal";
    const arithlat::Json doc = {{"error", {{"code", name}, {"message", last_message}}}};
    *out_json = dup_string(doc.dump(2) + "\n");
  }
  return st;
}

int al_last_error_code(void) { return last_code; }

const char* al_last_error_message(void) { return last_message.c_str(); }

void al_string_free(char* s) { std::free(s); }

al_status al_algebra_new(const char* a, const char* b, al_algebra** out) {
  if (!a || !b || !out) return null_argument("al_algebra_new");
  *out = nullptr;
  return guarded([&] {
    *out = new al_algebra{arithlat::QuaternionAlgebra(arithlat::parse_rational(a), arithlat::parse_rational(b))};
    return AL_OK;
  });
}

void al_algebra_free(al_algebra* alg) { delete alg; }

al_status al_algebra_is_division(const al_algebra* alg, int* out) {
  if (!alg || !out) return null_argument("al_algebra_is_division");
  return guarded([&] {
    *out = arithlat::is_division(alg->alg) ? 1 : 0;
    return AL_OK;
  });
}

al_status al_algebra_split_at_infinity(const al_algebra* alg, int* out) {
  if (!alg || !out) return null_argument("al_algebra_split_at_infinity");
  return guarded([&] {
    *out = arithlat::split_at_infinity(alg->alg) ? 1 : 0;
    return AL_OK;
  });
}

al_status al_algebra_hilbert_symbol(const al_algebra* alg, const char* place, int* out) {
  if (!alg || !place || !out) return null_argument("al_algebra_hilbert_symbol");
  return guarded([&] {
    const std::string p = place;
    arithlat::Place v = arithlat::Place::infinity();
    if (p != "inf") {
      const arithlat::Rational r = arithlat::parse_rational(p);
      if (!arithlat::is_integer(r)) arithlat::fail(arithlat::ErrorCode::InvalidPlace, "place must be a prime or inf");
      v = arithlat::Place::at(r.get_num());
    }
    *out = arithlat::hilbert_symbol(alg->alg.a(), alg->alg.b(), v);
    return AL_OK;
  });
}

}  // extern "C"
