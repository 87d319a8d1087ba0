#include <vector>
namespace geo {
template <typename T>
class PointCloud : public Base {
public:
    explicit PointCloud(std::size_t n) : points_(n) {}
    auto raw() const noexcept -> const char* { return R"(raw "text")"; }
    double scale = 1.5e-3;
    int mask = 0xFFu;
private:
    std::vector<T> points_;
    bool dirty_ = false;
};
}  // namespace geo
