// dltag command line: analyze annotated discourse files, emit logical
// forms, derivation dumps, DOT trees and resolution traces, or run the
// golden corpus. Links the engine through the public C API only.
//
// Exit codes: 0 ok, 1 usage, 2 analysis error, 3 corpus mismatch.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dltag.h"

namespace fs = std::filesystem;

namespace {

struct EmitSpec {
  dltag_emit_t what;
  const char* name;
  const char* extension;
};

const EmitSpec kEmits[] = {
    {DLTAG_EMIT_LF, "lf", ".lf"},
    {DLTAG_EMIT_DERIVATION, "derivation", ".derivation"},
    {DLTAG_EMIT_DERIVED_DOT, "derived-dot", ".derived.dot"},
    {DLTAG_EMIT_DERIVATION_DOT, "derivation-dot", ".derivation.dot"},
    {DLTAG_EMIT_TRACE, "trace", ".trace"},
    {DLTAG_EMIT_CROSSING, "crossing", ".crossing"},
};

std::string slurp(const fs::path& path, bool& ok) {
  std::ifstream in(path);
  if (!in) {
    ok = false;
    return "";
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ok = true;
  return buf.str();
}

int firstDifferingLine(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected), a(actual);
  std::string le, la;
  int line = 0;
  while (true) {
    line++;
    bool he = static_cast<bool>(std::getline(e, le));
    bool ha = static_cast<bool>(std::getline(a, la));
    if (!he && !ha) return 0;
    if (he != ha || le != la) return line;
  }
}

int analysisError(dltag_engine_t* engine) {
  std::cerr << "error: " << dltag_engine_last_error(engine) << "\n";
  return 2;
}

// Corpus mode: every .disc runs against its sibling goldens byte-exactly;
// a .disc without goldens, or a golden without its .disc, is a failure.
int runCorpus(dltag_engine_t* engine, const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: corpus path is not a directory: " << dir << "\n";
    return 2;
  }
  std::vector<fs::path> discs;
  std::vector<fs::path> goldens;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == ".disc") discs.push_back(entry.path());
    for (const auto& spec : kEmits) {
      const std::string name = entry.path().filename().string();
      const std::string ext = spec.extension;
      if (name.size() > ext.size() && name.compare(name.size() - ext.size(), ext.size(), ext) == 0)
        goldens.push_back(entry.path());
    }
  }
  std::sort(discs.begin(), discs.end());
  std::sort(goldens.begin(), goldens.end());

  int failures = 0;
  std::map<std::string, bool> goldenSeen;
  for (const auto& g : goldens) goldenSeen[g.string()] = false;

  for (const auto& disc : discs) {
    std::string stem = disc.string();
    stem = stem.substr(0, stem.size() - 5);  // drop ".disc"
    int matched = 0;
    for (const auto& spec : kEmits) {
      fs::path golden = stem + spec.extension;
      if (!goldenSeen.count(golden.string())) continue;
      goldenSeen[golden.string()] = true;
      matched++;

      dltag_mode_t mode = DLTAG_MODE_RESOLVE;
      if (spec.what == DLTAG_EMIT_CROSSING) mode = DLTAG_MODE_CHECK_CROSSING;
      if (spec.what == DLTAG_EMIT_DERIVATION || spec.what == DLTAG_EMIT_DERIVED_DOT ||
          spec.what == DLTAG_EMIT_DERIVATION_DOT)
        mode = DLTAG_MODE_DERIVE;

      dltag_analysis_t* a = dltag_analyze_file(engine, disc.string().c_str(), mode);
      if (!a) {
        std::cout << "FAIL " << golden.filename().string() << " (analysis error: "
                  << dltag_engine_last_error(engine) << ")\n";
        failures++;
        continue;
      }
      const char* emitted = dltag_analysis_emit(a, spec.what);
      bool ok = false;
      std::string expected = slurp(golden, ok);
      if (!ok) {
        std::cout << "FAIL " << golden.filename().string() << " (unreadable golden)\n";
        failures++;
      } else if (!emitted || expected != emitted) {
        int line = emitted ? firstDifferingLine(expected, emitted) : 1;
        std::cout << "FAIL " << golden.filename().string() << " (first differing line "
                  << line << ")\n";
        failures++;
      } else {
        std::cout << "PASS " << golden.filename().string() << "\n";
      }
      dltag_analysis_free(a);
    }
    if (matched == 0) {
      std::cout << "FAIL " << disc.filename().string() << " (no golden files)\n";
      failures++;
    }
  }
  for (const auto& [path, seen] : goldenSeen) {
    if (!seen) {
      std::cout << "FAIL " << fs::path(path).filename().string() << " (no .disc input)\n";
      failures++;
    }
  }
  if (failures) {
    std::cout << failures << " corpus mismatch(es)\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dltag: discourse derivations, logical forms and anaphoric resolution"};
  std::string input;
  std::string lexiconPath;
  std::string modeName = "resolve";
  std::string emitList;
  std::string compat;
  std::string outDir;
  app.add_option("input", input, "discourse file (.disc) or corpus directory")->required();
  app.add_option("--lexicon", lexiconPath, "lexicon file merged over the built-ins");
  app.add_option("--mode", modeName,
                 "derive | compose | resolve | check-crossing | corpus");
  app.add_option("--emit", emitList,
                 "comma list: lf,derivation,derived-dot,derivation-dot,trace");
  app.add_option("--compat", compat, "plausibility predicate name");
  app.add_option("--out", outDir, "write artifacts to DIR instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  dltag_engine_t* engine = dltag_engine_new();
  if (!engine) return 2;
  if (!lexiconPath.empty() &&
      dltag_engine_load_lexicon(engine, lexiconPath.c_str()) != DLTAG_OK)
    return analysisError(engine);
  if (!compat.empty()) dltag_engine_set_compat(engine, compat.c_str());

  if (modeName == "corpus") {
    int rc = runCorpus(engine, input);
    dltag_engine_free(engine);
    return rc;
  }

  dltag_mode_t mode;
  if (modeName == "derive") mode = DLTAG_MODE_DERIVE;
  else if (modeName == "compose") mode = DLTAG_MODE_COMPOSE;
  else if (modeName == "resolve") mode = DLTAG_MODE_RESOLVE;
  else if (modeName == "check-crossing") mode = DLTAG_MODE_CHECK_CROSSING;
  else {
    std::cerr << "error: unknown mode '" << modeName << "'\n";
    return 1;
  }

  std::vector<EmitSpec> emits;
  if (emitList.empty()) {
    if (mode == DLTAG_MODE_DERIVE) emits.push_back(kEmits[1]);
    else if (mode == DLTAG_MODE_CHECK_CROSSING) emits.push_back(kEmits[5]);
    else emits.push_back(kEmits[0]);
  } else {
    std::istringstream in(emitList);
    std::string name;
    while (std::getline(in, name, ',')) {
      bool found = false;
      for (const auto& spec : kEmits)
        if (name == spec.name) {
          emits.push_back(spec);
          found = true;
        }
      if (!found) {
        std::cerr << "error: unknown emit '" << name << "'\n";
        return 1;
      }
    }
  }

  dltag_analysis_t* a = dltag_analyze_file(engine, input.c_str(), mode);
  if (!a) {
    int rc = analysisError(engine);
    dltag_engine_free(engine);
    return rc;
  }

  int rc = 0;
  for (const auto& spec : emits) {
    const char* text = dltag_analysis_emit(a, spec.what);
    if (!text) {
      std::cerr << "error: mode '" << modeName << "' does not emit " << spec.name << "\n";
      rc = 1;
      continue;
    }
    if (outDir.empty()) {
      std::cout << text;
    } else {
      fs::create_directories(outDir);
      fs::path out = fs::path(outDir) / (fs::path(input).stem().string() + spec.extension);
      std::ofstream f(out);
      f << text;
    }
  }
  if (mode == DLTAG_MODE_CHECK_CROSSING && dltag_analysis_violations(a) > 0) rc = 2;

  dltag_analysis_free(a);
  dltag_engine_free(engine);
  return rc;
}
