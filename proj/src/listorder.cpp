#include "plump/listorder.hpp"

namespace plump {

std::vector<Tree> greedy_descend(const Tree& u) {
  std::vector<Tree> chain;
  chain.push_back(u);
  while (!chain.back().children().empty()) {
    chain.push_back(joinN(chain.back().children()));
  }
  return chain;
}

}  // namespace plump
