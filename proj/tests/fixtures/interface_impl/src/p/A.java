package p;

public interface A {
  void f1();
}
