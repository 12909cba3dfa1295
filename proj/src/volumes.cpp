#include "pillowcase/volumes.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "pillowcase/characters.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/shifted.hpp"
#include "pillowcase/weights.hpp"

namespace pillowcase {

Rational g_direct(const Partition& nu, const Partition& lambda)
{
    const int n = lambda.size();
    const int k = nu.size();
    if (!is_balanced(lambda)) throw usage_error("g_direct: unbalanced " + lambda.to_string());
    if (k % 2 || k > n) throw usage_error("g_direct: need |nu| even and at most |lambda|");

    Int denom_chi = involution_character(lambda, Partition());
    Rational ratio = Rational(near_involution_character(lambda, nu)) / Rational(denom_chi);
    Rational prefactor = pow2(k / 2) * Rational(factorial(static_cast<unsigned long>(n / 2))) /
                         (Rational(centralizer_size(nu)) *
                          Rational(factorial(static_cast<unsigned long>((n - k) / 2))));
    return prefactor * ratio;
}

Rational g_structural(const Partition& nu, const Partition& lambda)
{
    const int k = nu.size();
    if (k % 2) throw usage_error("g_structural: |nu| must be even");
    TwoQuotient q = two_core_quotient(lambda);
    if (q.core.length() != 0)
        throw usage_error("g_structural: unbalanced " + lambda.to_string());

    Rational sum(0);
    for (const Partition& mu : enumerate_partitions(k, PartitionFilter::balanced)) {
        Int chi = mn_character(mu, Partition(), nu);
        if (chi == 0) continue;
        TwoQuotient qm = two_core_quotient(mu);
        Rational term = Rational(chi) * shifted_schur(qm.alpha, q.alpha) *
                        shifted_schur(qm.beta, q.beta);
        if ((odd_parts_count(mu) / 2) % 2)
            sum -= term;
        else
            sum += term;
    }
    return pow2(k / 2) / Rational(centralizer_size(nu)) * sum;
}

std::map<Partition, Rational> h_vector(const Partition& lambda, long m)
{
    TwoQuotient q = two_core_quotient(lambda);
    if (q.core.length() != 0)
        throw usage_error("h_vector: unbalanced " + lambda.to_string());
    std::map<Partition, Rational> out;
    for (const Partition& mu : enumerate_partitions(static_cast<int>(m), PartitionFilter::balanced)) {
        TwoQuotient qm = two_core_quotient(mu);
        Rational value = shifted_schur(qm.alpha, q.alpha) * shifted_schur(qm.beta, q.beta);
        if ((odd_parts_count(mu) / 2) % 2) value = -value;
        out[mu] = value;
    }
    return out;
}

bool character_transform_check(const Partition& lambda, long m)
{
    if (m % 2) throw usage_error("character_transform_check: m must be even");
    std::map<Partition, Rational> h = h_vector(lambda, m);

    // V_nu = (1/z(nu)) sum_{balanced mu} chi^mu(nu) h_mu, for every class nu
    std::vector<Partition> classes = enumerate_partitions(static_cast<int>(m));
    std::map<Partition, Rational> v;
    for (const Partition& nu : classes) {
        Rational sum(0);
        for (const auto& [mu, hmu] : h) sum += Rational(mn_character(mu, Partition(), nu)) * hmu;
        v[nu] = sum / Rational(centralizer_size(nu));
    }

    // forward: for balanced nu, 2^{m/2} V_nu must equal g_structural(nu, lambda)
    for (const Partition& nu : classes) {
        if (!is_balanced(nu)) continue;
        if (pow2(static_cast<long>(m) / 2) * v[nu] != g_structural(nu, lambda)) return false;
    }

    // inverse: h_mu = sum over all classes nu of chi^mu(nu) V_nu
    for (const auto& [mu, hmu] : h) {
        Rational sum(0);
        for (const Partition& nu : classes)
            sum += Rational(mn_character(mu, Partition(), nu)) * v[nu];
        if (sum != hmu) return false;
    }
    return true;
}

Rational leading_term_vanishing(const Partition& nu)
{
    const int k = nu.size();
    if (k % 2) throw usage_error("leading_term_vanishing: |nu| must be even");
    Rational sum(0);
    for (const Partition& mu : enumerate_partitions(k, PartitionFilter::balanced))
        sum += Rational(mn_character(mu, Partition(), nu) * involution_character(mu, Partition()));
    return sum;
}

Observable Observable::parse(const std::string& text)
{
    Observable f;
    std::string token;
    std::istringstream in(text);
    bool saw_token = false;
    while (std::getline(in, token, '*')) {
        // trim
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw usage_error("observable: empty factor in '" + text + "'");
        token = token.substr(a, b - a + 1);
        saw_token = true;
        if (token == "1") continue;
        if (token[0] == 'p') {
            unsigned long k = 0;
            try {
                std::size_t used = 0;
                k = std::stoul(token.substr(1), &used);
                if (used != token.size() - 1) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw usage_error("observable: bad factor '" + token + "'");
            }
            if (k == 0) throw usage_error("observable: p0 is not a factor");
            f.p_factors_.push_back(static_cast<unsigned>(k));
            continue;
        }
        if (token.size() >= 4 && token.rfind("g[", 0) == 0 && token.back() == ']') {
            Partition nu = Partition::parse(token.substr(2, token.size() - 3));
            if (nu.size() == 0 || nu.size() % 2)
                throw usage_error("observable: g needs a nonempty even-size partition, got '" +
                                  token + "'");
            f.g_factors_.push_back(std::move(nu));
            continue;
        }
        throw usage_error("observable: bad factor '" + token + "'");
    }
    if (!saw_token) throw usage_error("observable: empty expression");

    std::sort(f.p_factors_.begin(), f.p_factors_.end());
    std::sort(f.g_factors_.begin(), f.g_factors_.end(),
              [](const Partition& x, const Partition& y) { return x.to_string() < y.to_string(); });

    std::ostringstream canon;
    bool first = true;
    for (const Partition& nu : f.g_factors_) {
        canon << (first ? "" : "*") << "g[" << nu.to_string() << "]";
        first = false;
    }
    for (unsigned k : f.p_factors_) {
        canon << (first ? "" : "*") << "p" << k;
        first = false;
    }
    f.canonical_ = first ? "1" : canon.str();
    return f;
}

std::string Observable::hash() const
{
    return fnv1a64_hex(canonical_);
}

Rational Observable::evaluate(const Partition& lambda) const
{
    Rational out(1);
    for (unsigned k : p_factors_) out *= shifted_power(k, lambda);
    for (const Partition& nu : g_factors_) out *= g_structural(nu, lambda);
    return out;
}

namespace {

// Evaluate several observables on one lambda, sharing repeated factors.
std::vector<Rational> evaluate_shared(const std::vector<const Observable*>& fs,
                                      const Partition& lambda)
{
    std::map<unsigned, Rational> p_values;
    std::map<std::string, Rational> g_values;
    std::vector<Rational> out;
    out.reserve(fs.size());
    for (const Observable* f : fs) {
        Rational value(1);
        for (unsigned k : f->p_factors()) {
            auto it = p_values.find(k);
            if (it == p_values.end())
                it = p_values.emplace(k, shifted_power(k, lambda)).first;
            value *= it->second;
        }
        for (const Partition& nu : f->g_factors()) {
            auto it = g_values.find(nu.to_string());
            if (it == g_values.end())
                it = g_values.emplace(nu.to_string(), g_structural(nu, lambda)).first;
            value *= it->second;
        }
        out.push_back(std::move(value));
    }
    return out;
}

// One (n1, n2) block for the observables listed in `fs`.
std::vector<Rational> block_values(const std::vector<const Observable*>& fs, long n1, long n2)
{
    std::vector<Rational> sums(fs.size(), Rational(0));
    for (const Partition& alpha : enumerate_partitions(static_cast<int>(n1))) {
        Int ha = hook_product(alpha);
        Rational ha4 = Rational(ha * ha * ha * ha);
        for (const Partition& beta : enumerate_partitions(static_cast<int>(n2))) {
            TwoQuotient q;
            q.alpha = alpha;
            q.beta = beta;
            Partition lambda = from_core_quotient(q);
            Int hb = hook_product(beta);
            Int hl = hook_product(lambda);
            Rational weight = Rational(hl * hl) /
                              (pow2(2 * lambda.size()) * ha4 * Rational(hb * hb * hb * hb));
            std::vector<Rational> values = evaluate_shared(fs, lambda);
            for (std::size_t i = 0; i < fs.size(); ++i)
                if (values[i] != 0) sums[i] += weight * values[i];
        }
    }
    return sums;
}

} // namespace

Rational expectation_block(const Observable& f, long n1, long n2, const BlockCache* cache)
{
    if (n1 < 0 || n2 < 0) throw usage_error("expectation_block: negative block index");
    if (cache) {
        if (auto hit = cache->load(f.hash(), n1, n2)) return *hit;
    }
    Rational value = block_values({&f}, n1, n2)[0];
    if (cache) cache->store(f.hash(), n1, n2, value);
    return value;
}

ExpectationSeries expectation_series(const Observable& f, long M, const BlockCache* cache,
                                     int workers)
{
    return expectation_series_multi({f}, M, cache, workers)[0];
}

std::vector<ExpectationSeries> expectation_series_multi(const std::vector<Observable>& fs, long M,
                                                        const BlockCache* cache, int workers)
{
    if (M < 0) throw usage_error("expectation_series: negative truncation");
    if (workers < 1) throw usage_error("expectation_series: need at least one worker");

    struct Job {
        long n1, n2;
        std::vector<std::size_t> missing;        // observable indices to compute
        std::vector<Rational> values;            // aligned with fs
    };
    std::vector<Job> jobs;
    for (long m = 0; m <= M; ++m)
        for (long n1 = 0; n1 <= m; ++n1) {
            Job job;
            job.n1 = n1;
            job.n2 = m - n1;
            job.values.assign(fs.size(), Rational(0));
            for (std::size_t i = 0; i < fs.size(); ++i) {
                std::optional<Rational> hit;
                if (cache) hit = cache->load(fs[i].hash(), job.n1, job.n2);
                if (hit)
                    job.values[i] = std::move(*hit);
                else
                    job.missing.push_back(i);
            }
            jobs.push_back(std::move(job));
        }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t j = next.fetch_add(1, std::memory_order_relaxed);
                if (j >= jobs.size()) return;
                Job& job = jobs[j];
                if (job.missing.empty()) continue;
                std::vector<const Observable*> wanted;
                for (std::size_t i : job.missing) wanted.push_back(&fs[i]);
                std::vector<Rational> computed = block_values(wanted, job.n1, job.n2);
                for (std::size_t k = 0; k < job.missing.size(); ++k) {
                    job.values[job.missing[k]] = computed[k];
                    if (cache) cache->store(fs[job.missing[k]].hash(), job.n1, job.n2, computed[k]);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ExpectationSeries> out(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        out[i].observable = fs[i].canonical();
        out[i].coefficients.assign(static_cast<std::size_t>(M) + 1, Rational(0));
    }
    for (const Job& job : jobs)
        for (std::size_t i = 0; i < fs.size(); ++i)
            out[i].coefficients[static_cast<std::size_t>(job.n1 + job.n2)] += job.values[i];

    if (cache)
        for (std::size_t i = 0; i < fs.size(); ++i)
            cache->write_aggregate(fs[i].hash(), out[i].coefficients);
    return out;
}

QuasimodularFit fit_expectation(const std::vector<Rational>& coefficients, int depth)
{
    if (coefficients.empty()) throw usage_error("fit_expectation: empty coefficient list");
    const long m = static_cast<long>(coefficients.size()) - 1;
    QSeries s(2 * m);
    for (long i = 0; i <= m; ++i) s.set_coefficient(2 * i, coefficients[static_cast<std::size_t>(i)]);
    s *= euler_product_even(2 * m).pow_rational(Rational(1, 2));
    return fit_quasimodular(build_basis(depth, 2 * m), s);
}

AsymptoticPoly analyze_expectation(const Observable& f, long M, int depth,
                                   const SubstitutionTable& table, const BlockCache* cache,
                                   int workers)
{
    ExpectationSeries series = expectation_series(f, M, cache, workers);
    return asymptotic_value(fit_expectation(series.coefficients, depth), table);
}

} // namespace pillowcase
