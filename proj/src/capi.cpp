#include "dltag.h"

#include <map>
#include <string>

#include "analysis.hpp"

using namespace dltag;

struct dltag_engine {
  Lexicon lexicon = Lexicon::defaults();
  std::string compat;
  std::string lastError;
};

struct dltag_analysis {
  Analysis analysis;
  std::map<int, std::string> emitted;  // cache, keyed by dltag_emit_t
};

namespace {

dltag_status_t statusOf(const Error& e) {
  if (e.code() == "io-error") return DLTAG_ERR_IO;
  if (e.code() == "parse-error" || e.code() == "schema-violation") return DLTAG_ERR_PARSE;
  return DLTAG_ERR_ANALYSIS;
}

}  // namespace

extern "C" {

const char *dltag_version(void) { return "0.1.0"; }

dltag_engine_t *dltag_engine_new(void) {
  try {
    return new dltag_engine();
  } catch (...) {
    return nullptr;
  }
}

void dltag_engine_free(dltag_engine_t *engine) { delete engine; }

dltag_status_t dltag_engine_load_lexicon(dltag_engine_t *engine, const char *path) {
  if (!engine || !path) return DLTAG_ERR_IO;
  try {
    engine->lexicon.load(readFile(path));
    return DLTAG_OK;
  } catch (const Error& e) {
    engine->lastError = std::string(e.code()) + ": " + e.what();
    return statusOf(e);
  } catch (const std::exception& e) {
    engine->lastError = e.what();
    return DLTAG_ERR_ANALYSIS;
  }
}

dltag_status_t dltag_engine_set_compat(dltag_engine_t *engine, const char *name) {
  if (!engine) return DLTAG_ERR_ANALYSIS;
  engine->compat = name ? name : "";
  return DLTAG_OK;
}

const char *dltag_engine_last_error(const dltag_engine_t *engine) {
  return engine ? engine->lastError.c_str() : "";
}

dltag_analysis_t *dltag_analyze(dltag_engine_t *engine, const char *text,
                                dltag_mode_t mode) {
  if (!engine || !text) return nullptr;
  try {
    AnalysisOptions opts;
    opts.mode = static_cast<Mode>(mode);
    opts.compatOverride = engine->compat;
    auto *out = new dltag_analysis{Analysis::run(text, engine->lexicon, opts), {}};
    engine->lastError.clear();
    return out;
  } catch (const Error& e) {
    engine->lastError = std::string(e.code()) + ": " + e.what();
    return nullptr;
  } catch (const std::exception& e) {
    engine->lastError = e.what();
    return nullptr;
  }
}

dltag_analysis_t *dltag_analyze_file(dltag_engine_t *engine, const char *path,
                                     dltag_mode_t mode) {
  if (!engine || !path) return nullptr;
  try {
    std::string text = readFile(path);
    return dltag_analyze(engine, text.c_str(), mode);
  } catch (const Error& e) {
    engine->lastError = std::string(e.code()) + ": " + e.what();
    return nullptr;
  }
}

void dltag_analysis_free(dltag_analysis_t *analysis) { delete analysis; }

const char *dltag_analysis_emit(dltag_analysis_t *analysis, dltag_emit_t what) {
  if (!analysis) return nullptr;
  auto cached = analysis->emitted.find(what);
  if (cached != analysis->emitted.end()) return cached->second.c_str();
  try {
    const Analysis& a = analysis->analysis;
    std::string out;
    switch (what) {
      case DLTAG_EMIT_LF:
        if (a.mode() == Mode::Derive || a.mode() == Mode::CheckCrossing) return nullptr;
        out = a.emitLf();
        break;
      case DLTAG_EMIT_DERIVATION:
        if (a.mode() == Mode::CheckCrossing) return nullptr;
        out = a.emitDerivation();
        break;
      case DLTAG_EMIT_DERIVED_DOT:
        if (a.mode() == Mode::CheckCrossing) return nullptr;
        out = a.emitDerivedDot();
        break;
      case DLTAG_EMIT_DERIVATION_DOT:
        if (a.mode() == Mode::CheckCrossing) return nullptr;
        out = a.emitDerivationDot();
        break;
      case DLTAG_EMIT_TRACE:
        if (a.mode() == Mode::Derive || a.mode() == Mode::CheckCrossing) return nullptr;
        out = a.emitTrace();
        break;
      case DLTAG_EMIT_CROSSING:
        out = a.emitCrossing();
        break;
      default:
        return nullptr;
    }
    analysis->emitted[what] = std::move(out);
    return analysis->emitted[what].c_str();
  } catch (...) {
    return nullptr;
  }
}

int dltag_analysis_violations(const dltag_analysis_t *analysis) {
  return analysis ? analysis->analysis.violationCount() : -1;
}

}  // extern "C"
