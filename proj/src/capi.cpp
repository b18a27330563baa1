#include "ordspan/ordspan.h"

#include "ordspan/error.hpp"
#include "ordspan/expr.hpp"
#include "ordspan/runs.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct ordspan_context {
  ordspan::RunConfig config;
  std::string last_error;
};

struct ordspan_report {
  ordspan::Report report;
};

namespace {

ordspan_status status_of(ordspan::ErrorCode code) {
  using ordspan::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return ORDSPAN_INVALID_ARGUMENT;
    case ErrorCode::invalid_value: return ORDSPAN_INVALID_VALUE;
    case ErrorCode::syntax: return ORDSPAN_SYNTAX;
    case ErrorCode::witness_invalid: return ORDSPAN_WITNESS_INVALID;
    case ErrorCode::resource: return ORDSPAN_RESOURCE;
    case ErrorCode::config: return ORDSPAN_CONFIG;
    case ErrorCode::io: return ORDSPAN_IO;
  }
  return ORDSPAN_INTERNAL;
}

// Runs fn, translating exceptions into a status and ctx->last_error.
template <typename F>
ordspan_status guarded(ordspan_context* ctx, F&& fn) {
  if (!ctx) return ORDSPAN_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return ORDSPAN_OK;
  } catch (const ordspan::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return ORDSPAN_RESOURCE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ORDSPAN_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ordspan::OutputFormat format_of(ordspan_format f) {
  switch (f) {
    case ORDSPAN_FORMAT_JSON: return ordspan::OutputFormat::json;
    case ORDSPAN_FORMAT_CSV: return ordspan::OutputFormat::csv;
    case ORDSPAN_FORMAT_TABLE: return ordspan::OutputFormat::table;
  }
  throw ordspan::Error(ordspan::ErrorCode::invalid_argument, "unknown output format");
}

ordspan::Integer parse_decimal(const char* text) {
  ordspan::Integer v;
  if (!text || v.set_str(text, 10) != 0) {
    throw ordspan::Error(ordspan::ErrorCode::invalid_argument, std::string("not a decimal integer: '") +
                                                                   (text ? text : "(null)") + "'");
  }
  return v;
}

template <ordspan::Report (*Run)(const ordspan::RunConfig&)>
ordspan_status run(ordspan_context* ctx, ordspan_report** out) {
  if (!out) return ORDSPAN_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new ordspan_report{Run(ctx->config)}; });
}

}  // namespace

extern "C" {

const char* ordspan_version(void) { return "0.1.0"; }

const char* ordspan_status_string(ordspan_status status) {
  switch (status) {
    case ORDSPAN_OK: return "ok";
    case ORDSPAN_INVALID_ARGUMENT: return "invalid argument";
    case ORDSPAN_INVALID_VALUE: return "invalid value";
    case ORDSPAN_SYNTAX: return "syntax error";
    case ORDSPAN_WITNESS_INVALID: return "witness invalid";
    case ORDSPAN_RESOURCE: return "resource limit";
    case ORDSPAN_CONFIG: return "configuration error";
    case ORDSPAN_IO: return "i/o error";
    case ORDSPAN_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ordspan_status ordspan_context_create(ordspan_context** out) {
  if (!out) return ORDSPAN_INVALID_ARGUMENT;
  *out = new (std::nothrow) ordspan_context{};
  return *out ? ORDSPAN_OK : ORDSPAN_RESOURCE;
}

void ordspan_context_destroy(ordspan_context* ctx) { delete ctx; }

const char* ordspan_context_last_error(const ordspan_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

ordspan_status ordspan_context_set(ordspan_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    if (!key || !value) throw ordspan::Error(ordspan::ErrorCode::invalid_argument, "key and value are required");
    ctx->config.set(key, value);
  });
}

ordspan_status ordspan_context_load_config(ordspan_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) throw ordspan::Error(ordspan::ErrorCode::invalid_argument, "path is required");
    ctx->config.load_file(path);
  });
}

ordspan_format ordspan_context_format(const ordspan_context* ctx) {
  if (!ctx) return ORDSPAN_FORMAT_JSON;
  switch (ctx->config.format) {
    case ordspan::OutputFormat::csv: return ORDSPAN_FORMAT_CSV;
    case ordspan::OutputFormat::table: return ORDSPAN_FORMAT_TABLE;
    default: return ORDSPAN_FORMAT_JSON;
  }
}

const char* ordspan_context_out(const ordspan_context* ctx) { return ctx ? ctx->config.out.c_str() : ""; }

ordspan_status ordspan_run_span(ordspan_context* ctx, ordspan_report** out) { return run<ordspan::run_span>(ctx, out); }
ordspan_status ordspan_run_table(ordspan_context* ctx, ordspan_report** out) { return run<ordspan::run_table>(ctx, out); }
ordspan_status ordspan_run_tuples(ordspan_context* ctx, ordspan_report** out) {
  return run<ordspan::run_tuples>(ctx, out);
}
ordspan_status ordspan_run_prefix_code(ordspan_context* ctx, ordspan_report** out) {
  return run<ordspan::run_prefix_code>(ctx, out);
}
ordspan_status ordspan_run_growth(ordspan_context* ctx, ordspan_report** out) {
  return run<ordspan::run_growth>(ctx, out);
}
ordspan_status ordspan_run_bound(ordspan_context* ctx, ordspan_report** out) { return run<ordspan::run_bound>(ctx, out); }
ordspan_status ordspan_run_verify(ordspan_context* ctx, ordspan_report** out) {
  return run<ordspan::run_verify>(ctx, out);
}
ordspan_status ordspan_run_scan(ordspan_context* ctx, ordspan_report** out) { return run<ordspan::run_scan>(ctx, out); }

ordspan_status ordspan_report_render(const ordspan_report* report, ordspan_format format, char** out) {
  if (!report || !out) return ORDSPAN_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    *out = dup(report->report.render(format_of(format)));
    return ORDSPAN_OK;
  } catch (const ordspan::Error& e) {
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    return ORDSPAN_RESOURCE;
  }
}

ordspan_status ordspan_report_write(ordspan_context* ctx, const ordspan_report* report, ordspan_format format,
                                    const char* path, size_t* bytes_written) {
  if (!report) return ORDSPAN_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    const std::size_t n = ordspan::emit(report->report, format_of(format), path ? path : "");
    if (bytes_written) *bytes_written = n;
  });
}

int ordspan_report_mismatch(const ordspan_report* report) { return report && report->report.mismatch ? 1 : 0; }

void ordspan_report_destroy(ordspan_report* report) { delete report; }

ordspan_status ordspan_eval_witness(ordspan_context* ctx, const char* witness, int base, char** value) {
  if (!value) return ORDSPAN_INVALID_ARGUMENT;
  *value = nullptr;
  return guarded(ctx, [&] {
    if (!witness) throw ordspan::Error(ordspan::ErrorCode::invalid_argument, "witness is required");
    ordspan::validate_base(base);
    *value = dup(ordspan::eval_witness(ordspan::parse_witness(witness, base), base, ctx->config.caps).to_string());
  });
}

ordspan_status ordspan_format_witness(ordspan_context* ctx, const char* witness, int base, char** text) {
  if (!text) return ORDSPAN_INVALID_ARGUMENT;
  *text = nullptr;
  return guarded(ctx, [&] {
    if (!witness) throw ordspan::Error(ordspan::ErrorCode::invalid_argument, "witness is required");
    ordspan::validate_base(base);
    *text = dup(ordspan::format_witness(ordspan::parse_witness(witness, base)));
  });
}

ordspan_status ordspan_radical_free(ordspan_context* ctx, const char* value, const char* variant, int* result) {
  if (!result) return ORDSPAN_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    const auto v = variant ? ordspan::parse_radical_free_variant(variant) : ctx->config.variant;
    *result = ordspan::radical_free(parse_decimal(value), v) ? 1 : 0;
  });
}

ordspan_status ordspan_is_perfect_power(ordspan_context* ctx, const char* value, int* result) {
  if (!result) return ORDSPAN_INVALID_ARGUMENT;
  return guarded(ctx, [&] { *result = ordspan::is_perfect_power(parse_decimal(value)) ? 1 : 0; });
}

void ordspan_string_free(char* s) { std::free(s); }

}  // extern "C"
