package com.jee;

import javax.servlet.annotation.WebServlet;
import javax.servlet.http.HttpServlet;

@WebServlet("/MySecondServlet")
public class MySecondServlet extends HttpServlet {
}
