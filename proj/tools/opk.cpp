#include <cstdio>

int main() {
  std::puts("opk: not wired up yet");
  return 0;
}
