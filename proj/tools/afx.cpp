#include <iostream>

int main() {
  std::cout << "afx: placeholder\n";
  return 0;
}
