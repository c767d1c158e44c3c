#include "huffman.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

namespace abr {

namespace {

constexpr unsigned kMaxCodeLength = 63;

struct TreeNode {
    std::uint64_t freq;
    std::uint32_t tiebreak; // symbol for leaves, 256 + creation index for internal
    int symbol;             // -1 for internal
    int left = -1;
    int right = -1;
};

struct NodeOrder {
    const std::vector<TreeNode>* nodes;
    bool operator()(int a, int b) const {
        const auto& na = (*nodes)[static_cast<std::size_t>(a)];
        const auto& nb = (*nodes)[static_cast<std::size_t>(b)];
        if (na.freq != nb.freq)
            return na.freq < nb.freq;
        return na.tiebreak < nb.tiebreak;
    }
};

void assign_depths(const std::vector<TreeNode>& nodes, int index, unsigned depth,
                   std::array<std::uint8_t, 256>& lengths) {
    const auto& node = nodes[static_cast<std::size_t>(index)];
    if (node.symbol >= 0) {
        if (depth > kMaxCodeLength)
            throw RangeError("code length exceeds " + std::to_string(kMaxCodeLength) + " bits");
        lengths[static_cast<std::size_t>(node.symbol)] =
            static_cast<std::uint8_t>(std::max(depth, 1u));
        return;
    }
    assign_depths(nodes, node.left, depth + 1, lengths);
    assign_depths(nodes, node.right, depth + 1, lengths);
}

// Canonical code values from a length table: symbols sorted by
// (length, symbol) receive consecutive codes. Throws DecodeError when the
// lengths cannot form a prefix code (untrusted containers).
std::array<std::uint64_t, 256> assign_canonical(const std::array<std::uint8_t, 256>& lengths) {
    std::vector<std::uint16_t> symbols;
    for (unsigned s = 0; s < 256; ++s)
        if (lengths[s] > 0)
            symbols.push_back(static_cast<std::uint16_t>(s));
    std::sort(symbols.begin(), symbols.end(), [&lengths](std::uint16_t a, std::uint16_t b) {
        if (lengths[a] != lengths[b])
            return lengths[a] < lengths[b];
        return a < b;
    });

    std::array<std::uint64_t, 256> codes{};
    std::uint64_t next = 0;
    unsigned prev_len = 0;
    for (const auto s : symbols) {
        const unsigned len = lengths[s];
        if (prev_len != 0)
            next = (next + 1) << (len - prev_len);
        if (len < 64 && (next >> len) != 0)
            throw DecodeError("code length table violates the prefix property");
        codes[s] = next;
        prev_len = len;
    }
    return codes;
}

// Flat binary decode tree; index 0 is the root.
struct DecodeTree {
    struct Node {
        int child[2] = {-1, -1};
        int symbol = -1;
    };
    std::vector<Node> nodes;

    explicit DecodeTree(const PrefixCode& code) {
        nodes.emplace_back();
        for (unsigned s = 0; s < 256; ++s) {
            const unsigned len = code.lengths[s];
            if (len == 0)
                continue;
            int at = 0;
            for (unsigned i = len; i-- > 0;) {
                const unsigned bit = (code.codes[s] >> i) & 1;
                int next = nodes[static_cast<std::size_t>(at)].child[bit];
                if (next < 0) {
                    next = static_cast<int>(nodes.size());
                    nodes[static_cast<std::size_t>(at)].child[bit] = next;
                    nodes.emplace_back();
                }
                at = next;
                if (nodes[static_cast<std::size_t>(at)].symbol >= 0)
                    throw DecodeError("code length table violates the prefix property");
            }
            auto& leaf = nodes[static_cast<std::size_t>(at)];
            if (leaf.symbol >= 0 || leaf.child[0] >= 0 || leaf.child[1] >= 0)
                throw DecodeError("code length table violates the prefix property");
            leaf.symbol = static_cast<int>(s);
        }
    }
};

class BitWriter {
public:
    void append(std::uint64_t code, unsigned len) {
        for (unsigned i = len; i-- > 0;) {
            acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((code >> i) & 1));
            if (++filled_ == 8) {
                bytes_.push_back(acc_);
                acc_ = 0;
                filled_ = 0;
            }
        }
        bits_ += len;
    }

    std::vector<std::uint8_t> finish() {
        if (filled_ > 0) {
            bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - filled_)));
            acc_ = 0;
            filled_ = 0;
        }
        return std::move(bytes_);
    }

    std::uint64_t bit_count() const { return bits_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bits_ = 0;
    std::uint8_t acc_ = 0;
    unsigned filled_ = 0;
};

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file: " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failed: " + path.string());
    return data;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open output file: " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out)
        throw IoError("write failed: " + path.string());
}

} // namespace

FrequencyTable build_frequency_table(std::span<const std::uint8_t> data) {
    FrequencyTable freq{};
    for (const auto b : data)
        ++freq[b];
    return freq;
}

std::string PrefixCode::code_string(std::uint8_t symbol) const {
    const unsigned len = lengths[symbol];
    std::string out;
    for (unsigned i = len; i-- > 0;)
        out += static_cast<char>('0' + ((codes[symbol] >> i) & 1));
    return out;
}

PrefixCode huffman_build(const FrequencyTable& freq) {
    std::vector<TreeNode> nodes;
    std::vector<int> heap;
    for (unsigned s = 0; s < 256; ++s) {
        if (freq[s] == 0)
            continue;
        heap.push_back(static_cast<int>(nodes.size()));
        nodes.push_back({freq[s], static_cast<std::uint32_t>(s), static_cast<int>(s)});
    }
    if (nodes.empty())
        throw RangeError("frequency table has no nonzero counts");

    const NodeOrder order{&nodes};
    std::make_heap(heap.begin(), heap.end(), [&order](int a, int b) { return order(b, a); });
    const auto pop_min = [&] {
        std::pop_heap(heap.begin(), heap.end(), [&order](int a, int b) { return order(b, a); });
        const int top = heap.back();
        heap.pop_back();
        return top;
    };

    std::uint32_t created = 0;
    while (heap.size() > 1) {
        const int a = pop_min();
        const int b = pop_min();
        TreeNode merged{nodes[static_cast<std::size_t>(a)].freq +
                            nodes[static_cast<std::size_t>(b)].freq,
                        256 + created++, -1, a, b};
        heap.push_back(static_cast<int>(nodes.size()));
        nodes.push_back(merged);
        std::push_heap(heap.begin(), heap.end(), [&order](int a2, int b2) { return order(b2, a2); });
    }

    PrefixCode code;
    assign_depths(nodes, heap.front(), 0, code.lengths);
    code.codes = assign_canonical(code.lengths);
    return code;
}

CompressedBlock huffman_compress(std::span<const std::uint8_t> data) {
    CompressedBlock block;
    if (data.empty())
        return block;

    block.code = huffman_build(build_frequency_table(data));
    BitWriter writer;
    for (const auto b : data)
        writer.append(block.code.codes[b], block.code.lengths[b]);
    block.payload_bits = writer.bit_count();
    block.payload = writer.finish();
    return block;
}

std::vector<std::uint8_t> huffman_decompress(const CompressedBlock& block) {
    std::vector<std::uint8_t> out;
    if (block.payload_bits == 0)
        return out;

    const bool has_codes =
        std::any_of(block.code.lengths.begin(), block.code.lengths.end(),
                    [](std::uint8_t len) { return len > 0; });
    if (!has_codes)
        throw DecodeError("payload bits present but the code table is empty");

    const DecodeTree tree(block.code);
    int at = 0;
    for (std::uint64_t bit = 0; bit < block.payload_bits; ++bit) {
        const std::size_t byte = static_cast<std::size_t>(bit / 8);
        if (byte >= block.payload.size())
            throw DecodeError("payload shorter than declared bit count");
        const unsigned value = (block.payload[byte] >> (7 - bit % 8)) & 1;
        at = tree.nodes[static_cast<std::size_t>(at)].child[value];
        if (at < 0)
            throw DecodeError("invalid code at bit offset " + std::to_string(bit));
        const int symbol = tree.nodes[static_cast<std::size_t>(at)].symbol;
        if (symbol >= 0) {
            out.push_back(static_cast<std::uint8_t>(symbol));
            at = 0;
        }
    }
    if (at != 0)
        throw DecodeError("truncated code at bit offset " +
                          std::to_string(block.payload_bits));
    return out;
}

std::vector<std::uint8_t> to_container(const CompressedBlock& block) {
    std::vector<std::uint8_t> out;
    out.reserve(4 + 1 + 256 + 1 + block.payload.size());
    out.insert(out.end(), kContainerMagic.begin(), kContainerMagic.end());
    out.push_back(kContainerVersion);
    out.insert(out.end(), block.code.lengths.begin(), block.code.lengths.end());
    out.push_back(static_cast<std::uint8_t>(block.pad_bits()));
    out.insert(out.end(), block.payload.begin(), block.payload.end());
    return out;
}

CompressedBlock from_container(std::span<const std::uint8_t> bytes) {
    constexpr std::size_t kHeaderSize = 4 + 1 + 256 + 1;
    if (bytes.size() < kHeaderSize)
        throw DecodeError("container truncated: " + std::to_string(bytes.size()) +
                          " bytes, header needs " + std::to_string(kHeaderSize));
    if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin()))
        throw DecodeError("bad container magic");
    if (bytes[4] != kContainerVersion)
        throw DecodeError("unsupported container version " + std::to_string(bytes[4]));

    CompressedBlock block;
    for (unsigned s = 0; s < 256; ++s) {
        const std::uint8_t len = bytes[5 + s];
        if (len > kMaxCodeLength)
            throw DecodeError("code length " + std::to_string(len) + " for symbol " +
                              std::to_string(s) + " exceeds " +
                              std::to_string(kMaxCodeLength));
        block.code.lengths[s] = len;
    }
    block.code.codes = assign_canonical(block.code.lengths);

    const std::uint8_t pad = bytes[4 + 1 + 256];
    if (pad > 7)
        throw DecodeError("pad length " + std::to_string(pad) + " exceeds 7");
    block.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
    if (block.payload.empty() && pad != 0)
        throw DecodeError("nonzero pad length with empty payload");
    block.payload_bits = block.payload.size() * 8 - pad;
    return block;
}

FileSizes compress_file(const std::filesystem::path& in, const std::filesystem::path& out) {
    const auto data = read_file_bytes(in);
    const auto container = to_container(huffman_compress(data));
    write_file_bytes(out, container);
    return {data.size(), container.size()};
}

FileSizes decompress_file(const std::filesystem::path& in, const std::filesystem::path& out) {
    const auto container = read_file_bytes(in);
    const auto data = huffman_decompress(from_container(container));
    write_file_bytes(out, data);
    return {container.size(), data.size()};
}

std::uint64_t compressed_payload_bits(std::span<const std::uint8_t> data) {
    if (data.empty())
        return 0;
    const auto freq = build_frequency_table(data);
    const auto code = huffman_build(freq);
    std::uint64_t bits = 0;
    for (unsigned s = 0; s < 256; ++s)
        bits += freq[s] * code.lengths[s];
    return bits;
}

CompareReport demo_compare(std::span<const std::uint8_t> data, StegoMask mask) {
    std::vector<std::uint8_t> transformed(data.begin(), data.end());
    for (auto& b : transformed)
        b = embed_byte(b, mask);
    const std::uint64_t raw = compressed_payload_bits(data);
    const std::uint64_t alt = compressed_payload_bits(transformed);
    return {raw, alt, raw == alt};
}

} // namespace abr
