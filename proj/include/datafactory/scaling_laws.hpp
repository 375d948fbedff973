#pragma once

// Data-centric scaling law: L(D) = D^-alpha + E with effective data
// D = (A*CH + B*RA + C*SIM)*V + F, fitted by Huber loss on log predictions
// from a grid of L-BFGS starts. Also embedding similarity between corpora.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace datafactory::scaling {

struct DataAttributes {
  double coherence = 0.0;
  double readability = 0.0;
  double similarity = 0.0;
};

struct ScalingSample {
  DataAttributes attrs;
  double volume = 0.0;  // tokens
  double loss = 0.0;    // observed test loss
  std::string stage;
  std::string benchmark;
};

struct LawParams {
  double alpha = 0.0;
  double a = 0.0;  // coherence coefficient
  double b = 0.0;  // readability coefficient
  double c = 0.0;  // similarity coefficient
  double e = 0.0;  // irreducible loss E
  double f = 0.0;  // offset F (tokens)
};

double effective_data(const DataAttributes& attrs, double volume, const LawParams& p);
// Throws Error when d <= 0.
double predicted_loss(double d, double alpha, double irreducible);

// Coordinates the optimizer works in: softplus-inverse of alpha, A, B, C;
// log E; F / 1e12.
using Theta = std::array<double, 6>;
inline constexpr double kOffsetScale = 1e12;

Theta to_theta(const LawParams& p);
LawParams from_theta(const Theta& t);

double softplus(double x);
double softplus_inverse(double y);
double log_sum_exp(double x, double y);
double huber(double r, double delta);

// log D with a linear penalty below D = 1 so infeasible points stay finite.
double barrier_log(double d);

struct Objective {
  std::span<const ScalingSample> samples;
  double delta = 1e-3;

  // Sum of Huber(LSE(-alpha log D_i, log E) - log L'_i).
  double value(const Theta& t) const;
  double value_and_gradient(const Theta& t, Theta& grad) const;
  // Central differences with step 1e-6 * max(|t_j|, 1).
  Theta numeric_gradient(const Theta& t) const;
};

// Objective evaluated at natural parameters.
double objective(const LawParams& p, std::span<const ScalingSample> samples, double delta = 1e-3);

struct LbfgsOptions {
  int memory = 10;
  int max_iterations = 500;
  double gradient_tolerance = 1e-12;
  double relative_tolerance = 1e-15;
};

struct LbfgsResult {
  Theta x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ValueGrad = std::function<double(const Theta&, Theta&)>;
LbfgsResult minimize_lbfgs(const ValueGrad& f, Theta x0, const LbfgsOptions& options = {});

struct GridAxes {
  std::vector<double> alpha{0.0, 0.67, 1.33, 2.0};
  std::vector<double> a, b, c;  // default: 8 points on [0, 2]
  std::vector<double> e{0.0, 0.67, 1.33, 2.0};
  std::vector<double> f{1e12, 1.67e12, 2.33e12, 3e12};
  GridAxes();
  std::size_t size() const;
  // Start by mixed-radix index; zero alpha/A/B/C/E map to 1e-6.
  LawParams start(std::size_t index) const;
};

struct FitOptions {
  double delta = 1e-3;
  // 0 runs the full grid; otherwise a seeded uniform subsample of starts.
  std::size_t grid_starts = 512;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  LbfgsOptions lbfgs;
  GridAxes grid;
};

struct FittedParams {
  LawParams params;
  double objective = 0.0;
  std::size_t start_index = 0;
  LawParams start_point;
  int iterations = 0;
  bool converged = false;
  std::size_t starts_run = 0;
};

// Throws Error("underdetermined ...") with fewer than six samples.
FittedParams fit(std::span<const ScalingSample> samples, const FitOptions& options = {});

// Reference attributes: human coherence/readability per stage and embedding
// similarity per (stage, benchmark).
struct StageAttributes {
  std::string stage;
  double coherence;
  double readability;
  std::vector<std::pair<std::string, double>> similarity;
};
const std::vector<StageAttributes>& reference_attributes();
LawParams reference_params();

// 84 samples over the 18 (stage, benchmark) combinations, volumes log-spaced
// on [1e8, 6.5e11] assigned round-robin, loss multiplied by exp(N(0, sigma)).
std::vector<ScalingSample> synthetic_samples(const LawParams& truth, double log_noise_sigma, std::uint64_t seed,
                                             std::size_t count = 84);

// CSV `stage,benchmark,coherence,readability,similarity,volume_tokens,loss`.
std::vector<ScalingSample> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, std::span<const ScalingSample> samples);

enum class Attribute { coherence, readability, similarity };
Attribute parse_attribute(std::string_view name);
const char* to_string(Attribute a);

struct SurfaceRow {
  double attr_value = 0.0;
  double volume = 0.0;
  double loss = 0.0;
};

// Varies one attribute over [lo, hi] in `steps` points for each volume,
// holding the others at `base`.
std::vector<SurfaceRow> loss_surface(const LawParams& p, Attribute axis, double lo, double hi, std::size_t steps,
                                     std::span<const double> volumes, const DataAttributes& base);

// Embeddings.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

// Character 1-3 gram feature hashing into `dim` buckets (log-scaled counts),
// L2-normalized. Deterministic and offline.
class LocalEmbedder : public EmbeddingProvider {
 public:
  explicit LocalEmbedder(std::size_t dim = 256) : dim_(dim) {}
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
  std::vector<double> embed_one(std::string_view text) const;

 private:
  std::size_t dim_;
};

struct RemoteOptions {
  std::string url;    // http(s)://host[:port]/path
  std::string token;  // sent as a Bearer token when nonempty
  std::size_t batch_size = 64;
  int max_retries = 3;
  int backoff_ms = 200;
  int timeout_s = 30;

  // DATAFACTORY_EMBED_URL and DATAFACTORY_EMBED_TOKEN.
  static RemoteOptions from_env();
};

// POSTs {"texts": [...]} and expects {"vectors": [[...], ...]}. Responses are
// cached by content hash; failed requests (transport errors, 429, 5xx) are
// retried with exponential backoff.
class RemoteEmbedder : public EmbeddingProvider {
 public:
  explicit RemoteEmbedder(RemoteOptions options);
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

  std::size_t requests_sent() const { return requests_; }
  std::size_t cache_size() const;

 private:
  std::vector<std::vector<double>> post_batch(const std::vector<std::string>& batch);

  RemoteOptions options_;
  std::string scheme_host_port_;
  std::string path_;
  mutable std::shared_mutex cache_mutex_;
  std::unordered_map<std::string, std::vector<double>> cache_;
  std::size_t requests_ = 0;
};

// Mean pairwise cosine between the two sets, computed as the dot product of
// the mean unit vectors; clamped to [0, 1]. Throws Error on empty input,
// dimension mismatch or zero vectors.
double similarity(const std::vector<std::string>& corpus, const std::vector<std::string>& testset,
                  EmbeddingProvider& provider);
double similarity(std::span<const std::vector<double>> corpus, std::span<const std::vector<double>> testset);

}  // namespace datafactory::scaling
