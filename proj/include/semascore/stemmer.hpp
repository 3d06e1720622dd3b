// Porter stemmer for English (M. Porter, 1980), including the bli->ble and
// logi->log departures of the reference implementation. Operates on
// lowercase ASCII words; anything else is returned unchanged.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace semascore {

class PorterStemmer {
public:
  std::string stem(std::string_view word) const {
    for (char c : word)
      if (c < 'a' || c > 'z') return std::string(word);
    if (word.size() <= 2) return std::string(word);
    State s{std::string(word)};
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    s.b.resize(s.k + 1);
    return std::move(s.b);
  }

private:
  struct State {
    std::string b;
    int k;  // index of last letter of the current word
    int j;  // index of last letter of the candidate stem

    explicit State(std::string word)
        : b(std::move(word)), k(int(b.size()) - 1), j(0) {}

    bool cons(int i) const {
      switch (b[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
          return false;
        case 'y':
          return i == 0 ? true : !cons(i - 1);
        default:
          return true;
      }
    }

    // Number of VC sequences in b[0..j].
    int m() const {
      int n = 0;
      int i = 0;
      for (;;) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
      for (;;) {
        for (;;) {
          if (i > j) return n;
          if (cons(i)) break;
          ++i;
        }
        ++i;
        ++n;
        for (;;) {
          if (i > j) return n;
          if (!cons(i)) break;
          ++i;
        }
        ++i;
      }
    }

    bool vowel_in_stem() const {
      for (int i = 0; i <= j; ++i)
        if (!cons(i)) return true;
      return false;
    }

    bool doublec(int i) const {
      return i >= 1 && b[i] == b[i - 1] && cons(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x, or y.
    bool cvc(int i) const {
      if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
      char ch = b[i];
      return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
      int len = int(s.size());
      if (len > k + 1) return false;
      if (b.compare(k - len + 1, len, s) != 0) return false;
      j = k - len;
      return true;
    }

    void set_to(std::string_view s) {
      b.replace(j + 1, b.size() - j - 1, s);
      k = j + int(s.size());
    }

    void r(std::string_view s) {
      if (m() > 0) set_to(s);
    }

    void step1ab() {
      if (b[k] == 's') {
        if (ends("sses")) k -= 2;
        else if (ends("ies")) set_to("i");
        else if (b[k - 1] != 's') --k;
      }
      if (ends("eed")) {
        if (m() > 0) --k;
      } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
        k = j;
        if (ends("at")) set_to("ate");
        else if (ends("bl")) set_to("ble");
        else if (ends("iz")) set_to("ize");
        else if (doublec(k)) {
          --k;
          char ch = b[k];
          if (ch == 'l' || ch == 's' || ch == 'z') ++k;
        } else if (m() == 1 && cvc(k)) {
          set_to("e");
        }
      }
    }

    void step1c() {
      if (ends("y") && vowel_in_stem()) b[k] = 'i';
    }

    void step2() {
      switch (b[k - 1]) {
        case 'a':
          if (ends("ational")) { r("ate"); break; }
          if (ends("tional")) { r("tion"); break; }
          break;
        case 'c':
          if (ends("enci")) { r("ence"); break; }
          if (ends("anci")) { r("ance"); break; }
          break;
        case 'e':
          if (ends("izer")) { r("ize"); break; }
          break;
        case 'l':
          if (ends("bli")) { r("ble"); break; }
          if (ends("alli")) { r("al"); break; }
          if (ends("entli")) { r("ent"); break; }
          if (ends("eli")) { r("e"); break; }
          if (ends("ousli")) { r("ous"); break; }
          break;
        case 'o':
          if (ends("ization")) { r("ize"); break; }
          if (ends("ation")) { r("ate"); break; }
          if (ends("ator")) { r("ate"); break; }
          break;
        case 's':
          if (ends("alism")) { r("al"); break; }
          if (ends("iveness")) { r("ive"); break; }
          if (ends("fulness")) { r("ful"); break; }
          if (ends("ousness")) { r("ous"); break; }
          break;
        case 't':
          if (ends("aliti")) { r("al"); break; }
          if (ends("iviti")) { r("ive"); break; }
          if (ends("biliti")) { r("ble"); break; }
          break;
        case 'g':
          if (ends("logi")) { r("log"); break; }
          break;
      }
    }

    void step3() {
      switch (b[k]) {
        case 'e':
          if (ends("icate")) { r("ic"); break; }
          if (ends("ative")) { r(""); break; }
          if (ends("alize")) { r("al"); break; }
          break;
        case 'i':
          if (ends("iciti")) { r("ic"); break; }
          break;
        case 'l':
          if (ends("ical")) { r("ic"); break; }
          if (ends("ful")) { r(""); break; }
          break;
        case 's':
          if (ends("ness")) { r(""); break; }
          break;
      }
    }

    void step4() {
      switch (b[k - 1]) {
        case 'a': if (ends("al")) break; return;
        case 'c': if (ends("ance")) break;
                  if (ends("ence")) break; return;
        case 'e': if (ends("er")) break; return;
        case 'i': if (ends("ic")) break; return;
        case 'l': if (ends("able")) break;
                  if (ends("ible")) break; return;
        case 'n': if (ends("ant")) break;
                  if (ends("ement")) break;
                  if (ends("ment")) break;
                  if (ends("ent")) break; return;
        case 'o': if (ends("ion") && j >= 0 && (b[j] == 's' || b[j] == 't')) break;
                  if (ends("ou")) break; return;
        case 's': if (ends("ism")) break; return;
        case 't': if (ends("ate")) break;
                  if (ends("iti")) break; return;
        case 'u': if (ends("ous")) break; return;
        case 'v': if (ends("ive")) break; return;
        case 'z': if (ends("ize")) break; return;
        default: return;
      }
      if (m() > 1) k = j;
    }

    void step5() {
      j = k;
      if (b[k] == 'e') {
        int a = m();
        if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
      }
      if (b[k] == 'l' && doublec(k) && m() > 1) --k;
    }
  };
};

}  // namespace semascore
