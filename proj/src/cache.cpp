#include "pillowcase/cache.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "pillowcase/errors.hpp"

namespace fs = std::filesystem;

namespace pillowcase {

namespace {

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw io_error("cannot open " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Rational parse_rational_file(const fs::path& p, const std::string& text)
{
    std::string body = text;
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    try {
        return parse_rational(body);
    } catch (const io_error&) {
        throw io_error("corrupt cache file " + p.string());
    }
}

// Write-to-temp-then-rename so readers never observe a partial file and
// concurrent writers of identical content are harmless.
void atomic_write(const fs::path& target, const std::string& content)
{
    static std::atomic<unsigned long> counter{0};
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(counter.fetch_add(1, std::memory_order_relaxed));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot create " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw io_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw io_error("cannot rename " + tmp.string() + " to " + target.string());
    }
}

} // namespace

BlockCache::BlockCache(fs::path root) : root_(std::move(root))
{
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw io_error("cannot create cache root " + root_.string());
}

fs::path BlockCache::observable_dir(const std::string& obs_hash) const
{
    return root_ / obs_hash;
}

fs::path BlockCache::block_path(const std::string& obs_hash, long n1, long n2) const
{
    return observable_dir(obs_hash) / (std::to_string(n1) + "-" + std::to_string(n2) + ".dat");
}

std::optional<Rational> BlockCache::load(const std::string& obs_hash, long n1, long n2) const
{
    fs::path p = block_path(obs_hash, n1, n2);
    if (!fs::exists(p)) return std::nullopt;
    return parse_rational_file(p, read_file(p));
}

void BlockCache::store(const std::string& obs_hash, long n1, long n2, const Rational& value) const
{
    fs::path dir = observable_dir(obs_hash);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create " + dir.string());
    atomic_write(block_path(obs_hash, n1, n2), to_string(value) + "\n");
}

void BlockCache::write_manifest(const std::string& obs_hash) const
{
    fs::path dir = observable_dir(obs_hash);
    std::vector<std::pair<long, long>> blocks;
    if (fs::exists(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            std::string name = entry.path().filename().string();
            if (name.size() < 5 || name.substr(name.size() - 4) != ".dat") continue;
            std::string stem = name.substr(0, name.size() - 4);
            if (stem == "aggregate") continue;
            std::size_t dash = stem.find('-', 1); // n1 may not be negative, but be safe
            if (dash == std::string::npos) continue;
            try {
                blocks.emplace_back(std::stol(stem.substr(0, dash)),
                                    std::stol(stem.substr(dash + 1)));
            } catch (const std::exception&) {
                continue;
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    std::ostringstream out;
    for (const auto& [n1, n2] : blocks)
        out << n1 << "-" << n2 << ".dat\n";
    atomic_write(dir / "manifest.txt", out.str());
}

void BlockCache::write_aggregate(const std::string& obs_hash,
                                 const std::vector<Rational>& coefficients) const
{
    fs::path dir = observable_dir(obs_hash);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create " + dir.string());
    std::ostringstream out;
    for (const Rational& c : coefficients) out << to_string(c) << "\n";
    atomic_write(dir / "aggregate.dat", out.str());
    write_manifest(obs_hash);
}

std::vector<Rational> BlockCache::read_aggregate(const std::string& obs_hash) const
{
    fs::path p = observable_dir(obs_hash) / "aggregate.dat";
    std::istringstream in(read_file(p));
    std::vector<Rational> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_rational(line));
        } catch (const io_error&) {
            throw io_error("corrupt aggregate file " + p.string());
        }
    }
    return out;
}

} // namespace pillowcase
