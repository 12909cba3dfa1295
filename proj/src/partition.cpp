#include "pillowcase/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pillowcase/errors.hpp"

namespace pillowcase {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw usage_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw usage_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text)
{
    if (text.find_first_not_of(" \t") == std::string::npos) return Partition();

    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // tolerate surrounding spaces
        std::size_t b = token.find_first_not_of(" \t");
        if (b == std::string::npos) throw usage_error("bad partition: '" + text + "'");
        std::size_t e = token.find_last_not_of(" \t");
        token = token.substr(b, e - b + 1);
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw usage_error("bad partition part: '" + token + "'");
            parts.push_back(v);
        } catch (const usage_error&) {
            throw;
        } catch (const std::exception&) {
            throw usage_error("bad partition part: '" + token + "'");
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<std::size_t>(parts_[0]));
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void enumerate_rec(int n, int max_part, std::vector<int>& current,
                   const std::function<void(const std::vector<int>&)>& emit)
{
    if (n == 0) {
        emit(current);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_rec(n - p, p, current, emit);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter, int max_part)
{
    if (n < 0) throw usage_error("enumerate_partitions: negative size");
    std::vector<Partition> out;
    if (max_part < 0) max_part = n;
    if (n == 0) {
        out.emplace_back();
    } else if (max_part >= 1) {
        std::vector<int> current;
        enumerate_rec(n, max_part, current, [&](const std::vector<int>& parts) {
            out.emplace_back(parts);
        });
    }
    if (filter == PartitionFilter::balanced) {
        std::erase_if(out, [](const Partition& p) { return !is_balanced(p); });
    }
    return out;
}

std::vector<int> hook_lengths(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            int arm = lambda.part(i - 1) - j;
            int leg = conj.part(j - 1) - i;
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

Int hook_product(const Partition& lambda)
{
    Int prod(1);
    for (int h : hook_lengths(lambda)) prod *= h;
    return prod;
}

int odd_parts_count(const Partition& mu)
{
    int c = 0;
    for (int p : mu.parts()) c += p & 1;
    return c;
}

std::vector<int> beta_set(const Partition& lambda, int padding)
{
    if (padding < lambda.length())
        throw usage_error("beta_set: padding below partition length");
    std::vector<int> out(static_cast<std::size_t>(padding));
    for (int i = 1; i <= padding; ++i)
        out[static_cast<std::size_t>(padding - i)] = lambda.part(i - 1) + padding - i;
    return out; // ascending
}

Partition partition_from_beta_set(std::vector<int> offsets)
{
    std::sort(offsets.begin(), offsets.end());
    const int L = static_cast<int>(offsets.size());
    std::vector<int> parts;
    for (int k = 1; k <= L; ++k) {
        int s = offsets[static_cast<std::size_t>(L - k)];
        if (s < 0) throw usage_error("beta-set offsets must be non-negative");
        if (k > 1 && s == offsets[static_cast<std::size_t>(L - k + 1)])
            throw usage_error("beta-set offsets must be distinct");
        int part = s - (L - k);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

TwoQuotient two_core_quotient(const Partition& lambda)
{
    const int L = lambda.length() + (lambda.length() % 2); // minimal even padding
    std::vector<int> odd_half, even_half;
    for (int s : beta_set(lambda, L)) {
        if (s % 2)
            odd_half.push_back((s - 1) / 2);
        else
            even_half.push_back(s / 2);
    }
    TwoQuotient q;
    q.alpha = partition_from_beta_set(odd_half);
    q.beta = partition_from_beta_set(even_half);

    // Pack each parity class downward: the residue is the 2-core.
    std::vector<int> packed;
    for (int i = 0; i < static_cast<int>(odd_half.size()); ++i) packed.push_back(2 * i + 1);
    for (int i = 0; i < static_cast<int>(even_half.size()); ++i) packed.push_back(2 * i);
    q.core = partition_from_beta_set(std::move(packed));
    return q;
}

Partition from_core_quotient(const TwoQuotient& q)
{
    const int core_pad = q.core.length() + (q.core.length() % 2);
    int c_odd = 0, c_even = 0;
    for (int s : beta_set(q.core, core_pad)) (s % 2 ? c_odd : c_even) += 1;

    const int t = std::max({0, q.alpha.length() - c_odd, q.beta.length() - c_even});
    const int m_odd = c_odd + t;
    const int m_even = c_even + t;

    std::vector<int> offsets;
    for (int a : beta_set(q.alpha, m_odd)) offsets.push_back(2 * a + 1);
    for (int b : beta_set(q.beta, m_even)) offsets.push_back(2 * b);
    return partition_from_beta_set(std::move(offsets));
}

bool is_balanced(const Partition& lambda)
{
    return balanced_by_sign_sum(lambda);
}

bool balanced_by_sign_sum(const Partition& lambda)
{
    long sum = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        int a = ((lambda.part(i - 1) - i + 1) % 2 == 0) ? 1 : -1;
        int b = ((-i + 1) % 2 == 0) ? 1 : -1;
        sum += a - b;
    }
    return sum == 0;
}

bool balanced_by_domino_stripping(const Partition& lambda)
{
    std::vector<int> parts(lambda.parts());
    auto valid_after = [&](std::size_t i) {
        // parts[i] was decreased; weak decrease must survive around i
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
        return true;
    };
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < parts.size() && !removed; ++i) {
            // horizontal domino at the end of row i
            if (parts[i] >= 2) {
                parts[i] -= 2;
                if (valid_after(i))
                    removed = true;
                else
                    parts[i] += 2;
            }
            // vertical domino in rows i, i+1
            if (!removed && i + 1 < parts.size() && parts[i] == parts[i + 1] && parts[i] >= 1) {
                parts[i] -= 1;
                parts[i + 1] -= 1;
                if (valid_after(i + 1) && valid_after(i))
                    removed = true;
                else {
                    parts[i] += 1;
                    parts[i + 1] += 1;
                }
            }
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    return parts.empty();
}

bool balanced_by_hook_split(const Partition& lambda)
{
    int even = 0, odd = 0;
    for (int h : hook_lengths(lambda)) (h % 2 ? odd : even) += 1;
    return even == odd;
}

Int centralizer_size(const Partition& nu)
{
    Int z(1);
    int run_value = -1;
    int run_length = 0;
    auto flush = [&] {
        if (run_length == 0) return;
        for (int i = 0; i < run_length; ++i) z *= run_value;
        z *= factorial(static_cast<unsigned long>(run_length));
    };
    for (int p : nu.parts()) {
        if (p == run_value) {
            ++run_length;
        } else {
            flush();
            run_value = p;
            run_length = 1;
        }
    }
    flush();
    return z;
}

} // namespace pillowcase
